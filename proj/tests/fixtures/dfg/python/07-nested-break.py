found = None
for row in grid:
    for cell in row:
        if cell == target:
            found = cell
            break
print(found)
