class A {
  int m(int n) {
    int f = 1;
    while (n > 1) {
      f = f * n;
      n--;
    }
    return f;
  }
}
