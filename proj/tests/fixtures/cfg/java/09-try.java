class A {
  void m() {
    try {
      risky();
    } catch (RuntimeException e) {
      report(e);
    } finally {
      close();
    }
  }
}
