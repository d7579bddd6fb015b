class A {
  int m(int k) {
    int r = switch (k) {
      case 1 -> 10;
      default -> k * 2;
    };
    return r;
  }
}
