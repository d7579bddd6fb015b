if c:
    v = 1
else:
    v = 2
print(v)
