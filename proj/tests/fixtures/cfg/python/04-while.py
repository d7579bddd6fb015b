def f(c):
    while c:
        x = 1
    return x
