v = 0
if v > 1:
    v = 2
w = v
