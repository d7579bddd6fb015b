class Stack {
  constructor() {
    this.items = [];
  }

  push(value) {
    this.items.push(value);
    return this;
  }

  pop() {
    if (this.items.length === 0) {
      throw new Error("stack is empty");
    }
    return this.items.pop();
  }
}

function balanced(text) {
  const stack = new Stack();
  const pairs = { ")": "(", "]": "[", "}": "{" };
  for (const ch of text) {
    if ("([{".includes(ch)) {
      stack.push(ch);
    } else if (ch in pairs) {
      try {
        if (stack.pop() !== pairs[ch]) return false;
      } catch (err) {
        return false;
      }
    }
  }
  return stack.items.length === 0;
}

console.log(balanced("{[()]}"), balanced("(]"));
