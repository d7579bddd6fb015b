class A {
  void m() {
    int a = 1;
    int b = a + a;
  }
}
