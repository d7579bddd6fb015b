for i in items:
    if i < 0:
        continue
    if i > 9:
        break
    use(i)
done()
