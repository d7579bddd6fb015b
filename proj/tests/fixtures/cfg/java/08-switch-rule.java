class A {
  void m(int k) {
    switch (k) {
      case 1 -> a();
      case 2 -> b();
      default -> c();
    }
  }
}
