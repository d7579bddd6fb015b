let last = null;
for (const item of items) {
  last = item;
}
show(last);
