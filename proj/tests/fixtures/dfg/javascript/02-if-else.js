let v;
if (c) {
  v = 1;
} else {
  v = 2;
}
log(v);
