if (a) {
  if (b) {
    x();
  }
} else {
  y();
}
z();
