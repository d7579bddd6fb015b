class A {
  int m(boolean x) {
    int y;
    if (x) {
      y = 1;
    } else {
      y = 2;
    }
    return y;
  }
}
