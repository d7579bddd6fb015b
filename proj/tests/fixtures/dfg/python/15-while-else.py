k = 0
while k < 3:
    k = k + 1
    if k == 2:
        continue
    last = k
else:
    done = last
