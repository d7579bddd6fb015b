try {
  risky();
} catch (e) {
  report(e);
} finally {
  close();
}
