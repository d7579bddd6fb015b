class A {
  void m() {
    while (true) {
      tick();
      break;
    }
    throw new IllegalStateException();
    cleanup();
  }
}
