#pragma once

#include <string>
#include <vector>

namespace ramrec {

// Tensor objects taken modulo associativity, symmetry and unit: an object is
// the exponent profile (alpha_0, ..., alpha_{n-1}) of  (x)_j N_j^{alpha_j}.
// The unit is the all-zero profile; tensor is pointwise addition.
class Obj {
 public:
  static Obj unit(int n);
  static Obj level(int n, int k);                 // N_k
  static Obj of_profile(std::vector<int> alphas); // validates entries

  int n() const { return static_cast<int>(alphas_.size()); }
  int alpha(int j) const { return alphas_[j]; }
  const std::vector<int>& profile() const { return alphas_; }

  int factors() const;          // total number of unit factors
  bool is_unit() const { return factors() == 0; }
  // Level of the single factor, or -1 when not exactly one factor.
  int single_level() const;
  // Every factor sits at level k (unit counts as a power of anything).
  bool pure_power_of(int k) const;
  // Highest level carrying a factor; 0 for the unit.
  int max_level() const;

  Obj tensor(const Obj& o) const;

  bool operator==(const Obj& o) const { return alphas_ == o.alphas_; }
  bool operator!=(const Obj& o) const { return alphas_ != o.alphas_; }
  bool operator<(const Obj& o) const { return alphas_ < o.alphas_; }

  std::string show() const;  // e.g. "N0*N1^2", unit prints as "1"

 private:
  explicit Obj(std::vector<int> alphas) : alphas_(std::move(alphas)) {}
  std::vector<int> alphas_;
};

}  // namespace ramrec
