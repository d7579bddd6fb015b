let r;
switch (k) {
  case 1:
    r = "one";
    break;
  case 2:
  case 3:
    r = "few";
  default:
    r = r || "many";
}
emit(r);
