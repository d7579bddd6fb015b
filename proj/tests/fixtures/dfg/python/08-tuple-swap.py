a, b = 1, 2
a, b = b, a
c = a - b
