class A {
  int m(int[][] g) {
    int hit = -1;
    outer:
    for (int[] row : g) {
      for (int c : row) {
        if (c < 0) { hit = c; break outer; }
      }
    }
    return hit;
  }
}
