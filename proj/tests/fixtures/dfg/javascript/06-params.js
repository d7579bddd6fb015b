function add(p, q = p) {
  const r = p + q;
  return r;
}
const s = add(1, 2);
