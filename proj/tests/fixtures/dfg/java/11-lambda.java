class A {
  void m(List<String> xs) {
    int base = 3;
    xs.forEach(x -> print(x, base));
  }
}
