let i = 0;
do {
  i = i + 1;
} while (i < 5);
console.log(i);
