function debounce(fn, wait) {
  let timer = null;
  return (...args) => {
    if (timer !== null) {
      clearTimeout(timer);
    }
    timer = setTimeout(() => {
      timer = null;
      fn(...args);
    }, wait);
  };
}

const log = debounce((message) => console.log(message), 100);
let count = 0;
do {
  log(`call ${count}`);
  count += 1;
} while (count < 3);
