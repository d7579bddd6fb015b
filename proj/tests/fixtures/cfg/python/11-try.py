try:
    risky()
except ValueError:
    handle()
finally:
    close()
