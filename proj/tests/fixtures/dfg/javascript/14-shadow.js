let x = 1;
function f() {
  let x = 2;
  return x;
}
g(x);
