class A {
  void m(int n) {
    for (int i = 0; i < n; i++) {
      use(i);
    }
  }
}
