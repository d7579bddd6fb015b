do {
  step();
} while (more());
end();
