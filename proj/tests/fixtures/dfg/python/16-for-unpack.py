for key, val in pairs.items():
    out[key] = val
