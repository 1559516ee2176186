#pragma once

#include <string>
#include <vector>

namespace ramrec {

struct LawItem {
  std::string name;
  bool ok;
  std::string detail;
};

struct LawReport {
  std::vector<LawItem> items;
  bool ok = true;

  void add(std::string name, bool pass, std::string detail = "") {
    ok = ok && pass;
    items.push_back(LawItem{std::move(name), pass, std::move(detail)});
  }
};

}  // namespace ramrec
