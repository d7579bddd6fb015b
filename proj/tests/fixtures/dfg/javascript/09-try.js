let v = 0;
try {
  v = risky();
} catch (err) {
  v = err.code;
} finally {
  cleanup(v);
}
