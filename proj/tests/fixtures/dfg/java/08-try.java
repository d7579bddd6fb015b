class A {
  int m() {
    int v = 0;
    try {
      v = parse();
    } catch (RuntimeException e) {
      v = e.hashCode();
    } finally {
      log(v);
    }
    return v;
  }
}
