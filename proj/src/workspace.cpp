#include "ramrec/workspace.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ramrec/error.hpp"
#include "ramrec/hyperops.hpp"
#include "ramrec/sexpr.hpp"
#include "ramrec/species.hpp"

namespace ramrec {

Workspace Workspace::make(int n, bool strict) {
  Workspace ws;
  ws.n = n;
  ws.strict = strict;
  ws.defs = stdlib_terms(n);
  return ws;
}

void Workspace::load_text(const std::string& text, const std::string& where) {
  for (const SNode& form : parse_sexprs(text, where)) {
    if (form.atom || form.kids.size() != 3 || !form.kids[0].atom ||
        form.kids[0].text != "def" || !form.kids[1].atom)
      fail(Errc::Parse, where + ":" + std::to_string(form.line) + ":" +
                            std::to_string(form.col) + ": expected (def name term)");
    const std::string& name = form.kids[1].text;
    if (defs.count(name))
      fail(Errc::Parse, where + ":" + std::to_string(form.kids[1].line) + ":" +
                            std::to_string(form.kids[1].col) + ": redefinition of '" +
                            name + "'");
    TermPtr t = read_term(form.kids[2], n, defs);
    if (strict && !strict_check(t))
      fail(Errc::Strictness, "definition '" + name + "' leaves the strict fragment");
    defs.emplace(name, std::move(t));
    load_order.push_back(name);
  }
}

void Workspace::load_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    load_text(buf.str(), "<stdin>");
    return;
  }
  std::ifstream in(path);
  if (!in) fail(Errc::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  load_text(buf.str(), path);
}

const TermPtr& Workspace::lookup(const std::string& name) const {
  auto it = defs.find(name);
  if (it == defs.end()) fail(Errc::Parse, "unknown name '" + name + "'");
  return it->second;
}

}  // namespace ramrec
