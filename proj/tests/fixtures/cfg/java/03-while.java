class A {
  void m(int n) {
    while (n > 0) {
      n--;
    }
    done();
  }
}
