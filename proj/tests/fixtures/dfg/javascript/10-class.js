class Counter extends Base {
  inc(step) {
    this.n = this.n + step;
    return step;
  }
}
const c = new Counter();
