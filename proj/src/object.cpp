#include "ramrec/object.hpp"

#include <numeric>
#include <sstream>

#include "ramrec/error.hpp"

namespace ramrec {

namespace {
void check_n(int n) {
  // Level 0 lacks a derivable duplication, so the calculus is only formed
  // over chains with at least three levels.
  if (n < 3) fail(Errc::Range, "term calculus requires at least 3 levels");
}
}  // namespace

Obj Obj::unit(int n) {
  check_n(n);
  return Obj(std::vector<int>(n, 0));
}

Obj Obj::level(int n, int k) {
  check_n(n);
  if (k < 0 || k >= n) fail(Errc::Range, "level index out of range");
  std::vector<int> a(n, 0);
  a[k] = 1;
  return Obj(std::move(a));
}

Obj Obj::of_profile(std::vector<int> alphas) {
  check_n(static_cast<int>(alphas.size()));
  for (int a : alphas)
    if (a < 0) fail(Errc::Range, "negative exponent in object profile");
  return Obj(std::move(alphas));
}

int Obj::factors() const { return std::accumulate(alphas_.begin(), alphas_.end(), 0); }

int Obj::single_level() const {
  if (factors() != 1) return -1;
  for (int j = 0; j < n(); ++j)
    if (alphas_[j] == 1) return j;
  return -1;
}

bool Obj::pure_power_of(int k) const {
  for (int j = 0; j < n(); ++j)
    if (j != k && alphas_[j] != 0) return false;
  return true;
}

int Obj::max_level() const {
  for (int j = n() - 1; j >= 0; --j)
    if (alphas_[j] > 0) return j;
  return 0;
}

Obj Obj::tensor(const Obj& o) const {
  if (n() != o.n()) fail(Errc::Arity, "objects live over different chains");
  std::vector<int> a(alphas_);
  for (int j = 0; j < n(); ++j) a[j] += o.alphas_[j];
  return Obj(std::move(a));
}

std::string Obj::show() const {
  if (is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < n(); ++j) {
    if (alphas_[j] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'N' << j;
    if (alphas_[j] > 1) os << '^' << alphas_[j];
  }
  return os.str();
}

}  // namespace ramrec
