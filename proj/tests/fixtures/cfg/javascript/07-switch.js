switch (k) {
  case 1:
    a();
  case 2:
    b();
    break;
  default:
    c();
}
end();
