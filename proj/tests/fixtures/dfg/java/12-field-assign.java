class A {
  int n;
  void m(int v) {
    this.n = v;
    A other = this;
    other.n = n;
  }
}
