let hits = 0;
outer: for (const a of xs) {
  for (const b of ys) {
    if (a === b) continue outer;
    hits++;
  }
}
report(hits);
