class A {
  int find(int[] xs, int t) {
    int i = 0;
    while (i < xs.length) {
      if (xs[i] == t) {
        return i;
      } else {
        i++;
      }
    }
    return -1;
  }
}
