class A {
  int m(Object o) {
    if (o instanceof String s) {
      return s.length();
    }
    return 0;
  }
}
