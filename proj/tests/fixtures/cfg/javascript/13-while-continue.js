while (ok()) {
  if (skip()) {
    continue;
  }
  work();
}
