class A {
  String m(String p) throws Exception {
    try (Reader r = open(p)) {
      return read(r);
    }
  }
}
