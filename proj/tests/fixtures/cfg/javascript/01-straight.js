let a = 1;
a++;
log(a);
