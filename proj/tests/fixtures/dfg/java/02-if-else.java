class A {
  int m(boolean c) {
    int v;
    if (c) {
      v = 1;
    } else {
      v = 2;
    }
    return v;
  }
}
