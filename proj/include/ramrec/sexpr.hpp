#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramrec/term.hpp"

namespace ramrec {

// S-expression with source position, the surface syntax of term files.
struct SNode {
  bool atom = false;
  std::string text;  // atom spelling
  std::vector<SNode> kids;
  int line = 1;
  int col = 1;
};

// Parses a whole buffer into top-level forms.  `where` names the source in
// diagnostics.  Comments run from ';' to end of line.
std::vector<SNode> parse_sexprs(const std::string& text, const std::string& where);

// Object literals: (N k) or (obj (N j) ...); the empty (obj) is the unit.
Obj read_object(const SNode& s, int n);

// Term constructors mirror Term::show exactly; bare atoms resolve through
// env, so definitions can reference earlier ones.
TermPtr read_term(const SNode& s, int n, const std::map<std::string, TermPtr>& env);

}  // namespace ramrec
