class A {
  int m(int n) {
    int i = 0;
    do {
      i++;
      if (i % 2 == 0) continue;
      n = n - i;
    } while (i < n);
    return n;
  }
}
