#include "ramrec/sexpr.hpp"

#include <cctype>

#include "ramrec/error.hpp"

namespace ramrec {

namespace {

struct Cursor {
  const std::string& text;
  const std::string& where;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  [[noreturn]] void die(int l, int c, const std::string& msg) const {
    fail(Errc::Parse, where + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + msg);
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    char ch = text[pos++];
    if (ch == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return ch;
  }
  void skip_space() {
    while (!eof()) {
      char ch = peek();
      if (ch == ';') {
        while (!eof() && peek() != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        take();
      } else {
        return;
      }
    }
  }
};

SNode parse_node(Cursor& c) {
  c.skip_space();
  if (c.eof()) c.die(c.line, c.col, "unexpected end of input");
  SNode node;
  node.line = c.line;
  node.col = c.col;
  char ch = c.peek();
  if (ch == ')') c.die(c.line, c.col, "unmatched ')'");
  if (ch == '(') {
    c.take();
    while (true) {
      c.skip_space();
      if (c.eof()) c.die(node.line, node.col, "unclosed '('");
      if (c.peek() == ')') {
        c.take();
        return node;
      }
      node.kids.push_back(parse_node(c));
    }
  }
  node.atom = true;
  while (!c.eof()) {
    char a = c.peek();
    if (a == '(' || a == ')' || a == ';' || std::isspace(static_cast<unsigned char>(a)))
      break;
    node.text.push_back(c.take());
  }
  return node;
}

[[noreturn]] void die_at(const SNode& s, const std::string& where_hint) {
  fail(Errc::Parse, "line " + std::to_string(s.line) + ", column " + std::to_string(s.col) +
                        ": " + where_hint);
}

int read_nat(const SNode& s) {
  if (!s.atom || s.text.empty()) die_at(s, "expected a decimal number");
  for (char ch : s.text)
    if (!std::isdigit(static_cast<unsigned char>(ch))) die_at(s, "expected a decimal number");
  if (s.text.size() > 9) die_at(s, "number too large");
  return std::stoi(s.text);
}

const SNode& arg(const SNode& s, size_t i, const char* head, size_t want) {
  if (s.kids.size() != want + 1)
    die_at(s, std::string("'") + head + "' takes " + std::to_string(want) + " arguments");
  return s.kids[i + 1];
}

}  // namespace

std::vector<SNode> parse_sexprs(const std::string& text, const std::string& where) {
  Cursor c{text, where};
  std::vector<SNode> out;
  while (true) {
    c.skip_space();
    if (c.eof()) return out;
    out.push_back(parse_node(c));
  }
}

Obj read_object(const SNode& s, int n) {
  if (s.atom) die_at(s, "expected an object literal");
  if (s.kids.empty()) die_at(s, "expected (N k) or (obj ...)");
  const SNode& head = s.kids[0];
  if (!head.atom) die_at(s, "expected (N k) or (obj ...)");
  if (head.text == "N") {
    if (s.kids.size() != 2) die_at(s, "'N' takes one level index");
    return Obj::level(n, read_nat(s.kids[1]));
  }
  if (head.text == "obj") {
    Obj acc = Obj::unit(n);
    for (size_t i = 1; i < s.kids.size(); ++i) acc = acc.tensor(read_object(s.kids[i], n));
    return acc;
  }
  die_at(s, "unknown object head '" + head.text + "'");
}

TermPtr read_term(const SNode& s, int n, const std::map<std::string, TermPtr>& env) {
  if (s.atom) {
    auto it = env.find(s.text);
    if (it == env.end()) die_at(s, "unknown name '" + s.text + "'");
    return it->second;
  }
  if (s.kids.empty() || !s.kids[0].atom) die_at(s, "expected a term form");
  const std::string& head = s.kids[0].text;
  auto obj1 = [&](size_t i, const char* h, size_t want) {
    return read_object(arg(s, i, h, want), n);
  };
  auto term1 = [&](size_t i, const char* h, size_t want) {
    return read_term(arg(s, i, h, want), n, env);
  };
  if (head == "id") return id(obj1(0, "id", 1));
  if (head == "zero") return zero(n, read_nat(arg(s, 0, "zero", 1)));
  if (head == "succ") return succ(n, read_nat(arg(s, 0, "succ", 1)));
  if (head == "eraser") return eraser(obj1(0, "eraser", 1));
  if (head == "dup") return dup(obj1(0, "dup", 1));
  if (head == "drop") return drop(n, read_nat(arg(s, 0, "drop", 1)));
  if (head == "comp") return comp(term1(0, "comp", 2), term1(1, "comp", 2));
  if (head == "tensor") return tensor_mor(term1(0, "tensor", 2), term1(1, "tensor", 2));
  if (head == "left") return left_unit(obj1(0, "left", 1));
  if (head == "sym") return sym(obj1(0, "sym", 2), obj1(1, "sym", 2));
  if (head == "assoc")
    return assoc(obj1(0, "assoc", 3), obj1(1, "assoc", 3), obj1(2, "assoc", 3));
  if (head == "fr")
    return flat_rec(read_nat(arg(s, 0, "fr", 3)), term1(1, "fr", 3), term1(2, "fr", 3));
  if (head == "srr")
    return safe_rec(read_nat(arg(s, 0, "srr", 3)), term1(1, "srr", 3), term1(2, "srr", 3));
  if (head == "sdr")
    return dep_rec(read_nat(arg(s, 0, "sdr", 3)), term1(1, "sdr", 3), term1(2, "sdr", 3));
  if (head == "psrr")
    return param_rec(read_nat(arg(s, 0, "psrr", 3)), term1(1, "psrr", 3),
                     term1(2, "psrr", 3));
  if (head == "raise")
    return raise_arrow(read_nat(arg(s, 0, "raise", 2)), term1(1, "raise", 2));
  if (head == "lower")
    return lower_arrow(read_nat(arg(s, 0, "lower", 2)), term1(1, "lower", 2));
  die_at(s, "unknown term head '" + head + "'");
}

}  // namespace ramrec
