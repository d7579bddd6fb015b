class A {
  class B {
    int f() {
      return 1;
    }
  }
  A() {
    init();
  }
}
