total = 0
for x in xs:
    total += x
print(total)
