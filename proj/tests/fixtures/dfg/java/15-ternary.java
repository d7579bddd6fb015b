class A {
  int m(int a, int b) {
    int max = a > b ? a : b;
    a += max;
    return a;
  }
}
