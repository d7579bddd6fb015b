x = 10
def f(x, y=x):
    z = x + y
    return z
r = f(x)
