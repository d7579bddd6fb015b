total = 0
for x in items:
    total = total + x
print(total)
