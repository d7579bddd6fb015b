try:
    r = compute()
except ValueError as e:
    r = e
print(r)
