class A {
  void m(int[] xs) {
    for (int x : xs) {
      if (x < 0) continue;
      use(x);
    }
  }
}
