let count = 0;
const inc = () => {
  count = count + 1;
};
inc();
