while n:
    n -= 1
else:
    done()
after()
