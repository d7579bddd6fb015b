class A {
  void m() {
    do {
      step();
    } while (more());
  }
}
