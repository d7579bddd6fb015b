outer: for (const r of rows) {
  for (const c of r) {
    if (c) break outer;
  }
}
done();
