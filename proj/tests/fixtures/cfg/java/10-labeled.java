class A {
  void m(int[][] g) {
    outer:
    for (int[] row : g) {
      for (int c : row) {
        if (c < 0) break outer;
        if (c == 0) continue outer;
      }
    }
  }
}
