x = 1
x = x + 2
y = x
