class A {
  void m() {
    int a = 1;
    a++;
    log(a);
  }
}
