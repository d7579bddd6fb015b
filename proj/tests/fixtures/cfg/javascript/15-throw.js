function check(v) {
  if (v < 0) {
    throw new Error("neg");
  }
  return v;
}
