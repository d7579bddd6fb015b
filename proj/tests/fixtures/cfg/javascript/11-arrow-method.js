const g = (x) => {
  return x * 2;
};
class K {
  m() {
    return 1;
  }
}
