while (i < n) {
  i++;
}
done();
