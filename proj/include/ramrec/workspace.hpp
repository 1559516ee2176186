#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramrec/eval.hpp"
#include "ramrec/term.hpp"

namespace ramrec {

// Session state behind the command line: the chain length, evaluation
// options, and the named definitions (hyperoperation library preloaded).
struct Workspace {
  int n = 4;
  long long fuel = kDefaultFuel;
  Value bound = 8;
  bool strict = false;
  bool json = false;
  std::map<std::string, TermPtr> defs;
  std::vector<std::string> load_order;  // user definitions, file order

  static Workspace make(int n, bool strict = false);

  // Parses (def name term) forms and adds them; names must be fresh.  Under
  // strict mode every added term must stay inside the strict fragment.
  void load_text(const std::string& text, const std::string& where);
  void load_file(const std::string& path);  // "-" reads stdin

  const TermPtr& lookup(const std::string& name) const;
};

}  // namespace ramrec
