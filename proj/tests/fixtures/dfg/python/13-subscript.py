d = {}
d["k"] = v
d.size = 1
print(d)
