const { a, b: c } = obj;
const [d, ...rest] = list;
use(a, c, d, rest);
