#include "ramrec/species.hpp"

#include <sstream>

#include "ramrec/error.hpp"

namespace ramrec {

std::string SpeciesSig::show() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int j = static_cast<int>(arg_counts.size()) - 1; j >= 0; --j)
    for (int c = 0; c < arg_counts[j]; ++c) {
      if (!first) os << ',';
      os << j;
      first = false;
    }
  os << ';' << out_level << ')';
  return os.str();
}

SpeciesSig species_signature(const TermPtr& t) {
  return SpeciesSig{t->dom().profile(), t->cod().max_level()};
}

bool strict_check(const TermPtr& t) {
  if (t->kind() == Tk::Lower) return false;
  for (const auto& k : t->kids())
    if (!strict_check(k)) return false;
  return true;
}

bool validate_safe_composition(const TermPtr& h, const std::vector<std::vector<TermPtr>>& rs) {
  const Obj& d = h->dom();
  int n = d.n();
  if (static_cast<int>(rs.size()) != n)
    fail(Errc::Shape, "expected one argument block per species, got " +
                          std::to_string(rs.size()) + " blocks for n=" + std::to_string(n));
  for (int i = 0; i < n; ++i) {
    int supplied = 0;
    for (const auto& r : rs[i]) supplied += r->cod().factors();
    if (supplied != d.alpha(i))
      fail(Errc::Shape, "species " + std::to_string(i) + " expects " +
                            std::to_string(d.alpha(i)) + " factors, arguments supply " +
                            std::to_string(supplied));
  }
  for (int i = 0; i < n; ++i)
    for (const auto& r : rs[i])
      if (r->cod().max_level() > i) return false;
  return true;
}

TermPtr promote_variable(const TermPtr& h, int k, int ordinal, int t) {
  const Obj& a = h->dom();
  int n = a.n();
  if (k < 0 || k >= n || t >= n) fail(Errc::Range, "species index out of range");
  if (t <= k) fail(Errc::Range, "promotion target must exceed the factor's level");
  if (ordinal < 0 || ordinal >= a.alpha(k))
    fail(Errc::Range, "domain has no level-" + std::to_string(k) + " factor #" +
                          std::to_string(ordinal));

  // Drop chain N_t -> N_k, highest drop applied first.
  TermPtr chain = drop(n, t - 1);
  for (int j = t - 2; j >= k; --j) chain = comp(drop(n, j), chain);

  // New domain: the factor moves from level k to level t; it occupies the
  // last level-t slot, so the core map sends it to the last level-k slot.
  std::vector<int> bp = a.profile();
  bp[k] -= 1;
  bp[t] += 1;
  std::vector<int> rest = bp;
  rest[t] -= 1;
  TermPtr w = tensor_mor(id(Obj::of_profile(rest)), chain);

  int count = a.alpha(k);
  if (ordinal != count - 1) {
    // Rotate the promoted value from the last level-k slot to slot `ordinal`
    // by swapping it past the block of factors it must precede.
    std::vector<int> cp = a.profile();
    cp[k] = ordinal;
    Obj blockD = Obj::of_profile([&] {
      std::vector<int> p(n, 0);
      p[k] = count - 1 - ordinal;
      return p;
    }());
    TermPtr m2 = tensor_mor(id(Obj::of_profile(cp)), sym(blockD, Obj::level(n, k)));
    w = comp(m2, w);
  }
  return comp(h, w);
}

}  // namespace ramrec
