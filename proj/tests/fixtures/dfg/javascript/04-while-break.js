let x = start;
while (true) {
  if (x > 10) break;
  x = x * 2;
}
done(x);
