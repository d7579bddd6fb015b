for (;;) {
  if (done()) break;
}
after();
