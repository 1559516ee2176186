#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramrec {

// Monotone endofunction on the finite chain {0 < 1 < ... < n-1}, stored by
// its image sequence.  These are the endofunctors of the chain category; the
// monoid product fg applies f first: (fg)(j) = g(f(j)).
class MonotoneMap {
 public:
  MonotoneMap(int n, std::vector<int> images);  // validates monotonicity and range

  static MonotoneMap identity(int n);

  int n() const { return n_; }
  int operator()(int j) const;
  const std::vector<int>& images() const { return img_; }

  bool operator==(const MonotoneMap& o) const { return img_ == o.img_; }
  bool operator<(const MonotoneMap& o) const { return img_ < o.img_; }

  std::string show() const;  // e.g. "[0,0,2]"

 private:
  int n_;
  std::vector<int> img_;
};

enum class CoKind { T, G };

// T_k bumps k to k+1; G_k pulls k+1 down to k.  Requires 0 <= k <= n-2.
MonotoneMap make_coercion(CoKind kind, int k, int n);

// Monoid product: apply f first, then g.
MonotoneMap compose_maps(const MonotoneMap& f, const MonotoneMap& g);

// Closure of {identity, T_k, G_k : 0 <= k <= n-2} under the product.
// Sorted lexicographically by image sequence.
std::vector<MonotoneMap> enumerate_monoid(int n);

// A 2-cell between monotone maps exists precisely when f <= g pointwise, and
// is then unique.  Components are recovered on demand from the endpoints.
struct NatCell {
  MonotoneMap source;
  MonotoneMap target;

  // Component at object i is the chain arrow source(i) <= target(i).
  std::vector<std::pair<int, int>> components() const;

  bool operator==(const NatCell& o) const { return source == o.source && target == o.target; }
  bool operator<(const NatCell& o) const {
    return source < o.source || (source == o.source && target < o.target);
  }
};

std::optional<NatCell> cell_exists(const MonotoneMap& f, const MonotoneMap& g);

// All cells reachable from the identity cells together with
// eps_k : G_k => id and eta_k : id => T_k, closed under vertical composition
// and whiskering with the generating endofunctors.
std::vector<NatCell> generate_cells(int n);

// Poset adjunction F -| G in the orientation of the coercion chain
// T_0 -| G_0 -| T_1 -| ... ; equivalently, for all x, y:
// G(x) <= y iff x <= F(y).
bool check_adjunction(const MonotoneMap& F, const MonotoneMap& G);

}  // namespace ramrec
