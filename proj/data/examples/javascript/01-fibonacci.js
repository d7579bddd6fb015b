function fibonacci(n) {
  let a = 0;
  let b = 1;
  const result = [];
  while (a < n) {
    result.push(a);
    const next = a + b;
    a = b;
    b = next;
  }
  return result;
}

console.log(fibonacci(100));
