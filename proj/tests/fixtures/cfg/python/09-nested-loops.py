for r in rows:
    for c in r:
        visit(c)
    end(r)
