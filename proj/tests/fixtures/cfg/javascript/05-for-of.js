for (const x of xs) {
  if (!x) continue;
  use(x);
}
