class A {
  void m(List<Integer> xs) {
    xs.forEach(x -> {
      if (x > 0) show(x);
    });
  }
}
