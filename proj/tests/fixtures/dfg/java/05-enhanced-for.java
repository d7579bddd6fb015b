class A {
  int m(List<Integer> xs) {
    int best = 0;
    for (int x : xs) {
      if (x > best) best = x;
    }
    return best;
  }
}
