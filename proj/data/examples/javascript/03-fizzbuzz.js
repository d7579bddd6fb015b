function label(n) {
  switch (n % 15) {
    case 0:
      return "FizzBuzz";
    case 3:
    case 6:
    case 9:
    case 12:
      return "Fizz";
    case 5:
    case 10:
      return "Buzz";
    default:
      return String(n);
  }
}

const lines = [];
for (let i = 1; i <= 15; i++) {
  lines.push(label(i));
}
console.log(lines.join("\n"));
