n = 1
def g():
    n = 2
    return n
m = n
