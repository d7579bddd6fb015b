while True:
    tick()
