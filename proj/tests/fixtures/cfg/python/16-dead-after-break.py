while x:
    break
    y = 1
z = 2
