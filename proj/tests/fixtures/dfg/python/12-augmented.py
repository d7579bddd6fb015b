s = 0
s += 5
t = s
