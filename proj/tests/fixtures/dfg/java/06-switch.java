class A {
  String m(int k) {
    String r = "";
    switch (k) {
      case 1:
        r = "one";
        break;
      default:
        r = r + "?";
    }
    return r;
  }
}
