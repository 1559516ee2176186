#include "ramrec/monotone.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "ramrec/error.hpp"

namespace ramrec {

MonotoneMap::MonotoneMap(int n, std::vector<int> images) : n_(n), img_(std::move(images)) {
  if (n < 2) fail(Errc::Range, "chain index must be at least 2");
  if (static_cast<int>(img_.size()) != n)
    fail(Errc::Arity, "image sequence length does not match chain size");
  for (int j = 0; j < n; ++j) {
    if (img_[j] < 0 || img_[j] >= n) fail(Errc::Range, "image out of range");
    if (j > 0 && img_[j] < img_[j - 1]) fail(Errc::Range, "image sequence not weakly increasing");
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> img(n);
  for (int j = 0; j < n; ++j) img[j] = j;
  return MonotoneMap(n, std::move(img));
}

int MonotoneMap::operator()(int j) const {
  if (j < 0 || j >= n_) fail(Errc::Range, "argument outside the chain");
  return img_[j];
}

std::string MonotoneMap::show() const {
  std::ostringstream os;
  os << '[';
  for (int j = 0; j < n_; ++j) {
    if (j) os << ',';
    os << img_[j];
  }
  os << ']';
  return os.str();
}

MonotoneMap make_coercion(CoKind kind, int k, int n) {
  if (k < 0 || k > n - 2) fail(Errc::Range, "coercion subscript must lie in [0, n-2]");
  std::vector<int> img(n);
  for (int j = 0; j < n; ++j) img[j] = j;
  if (kind == CoKind::T)
    img[k] = k + 1;
  else
    img[k + 1] = k;
  return MonotoneMap(n, std::move(img));
}

MonotoneMap compose_maps(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.n() != g.n()) fail(Errc::Arity, "maps live on different chains");
  std::vector<int> img(f.n());
  for (int j = 0; j < f.n(); ++j) img[j] = g(f(j));
  return MonotoneMap(f.n(), std::move(img));
}

std::vector<MonotoneMap> enumerate_monoid(int n) {
  std::set<std::vector<int>> seen;
  std::deque<MonotoneMap> work;
  std::vector<MonotoneMap> gens;
  gens.push_back(MonotoneMap::identity(n));
  for (int k = 0; k <= n - 2; ++k) {
    gens.push_back(make_coercion(CoKind::T, k, n));
    gens.push_back(make_coercion(CoKind::G, k, n));
  }
  for (const auto& g : gens)
    if (seen.insert(g.images()).second) work.push_back(g);
  std::vector<MonotoneMap> out(work.begin(), work.end());
  while (!work.empty()) {
    MonotoneMap f = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      for (MonotoneMap h : {compose_maps(f, g), compose_maps(g, f)}) {
        if (seen.insert(h.images()).second) {
          work.push_back(h);
          out.push_back(h);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> NatCell::components() const {
  std::vector<std::pair<int, int>> comps;
  comps.reserve(source.n());
  for (int i = 0; i < source.n(); ++i) comps.emplace_back(source(i), target(i));
  return comps;
}

std::optional<NatCell> cell_exists(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.n() != g.n()) fail(Errc::Arity, "maps live on different chains");
  for (int i = 0; i < f.n(); ++i)
    if (f(i) > g(i)) return std::nullopt;
  return NatCell{f, g};
}

std::vector<NatCell> generate_cells(int n) {
  auto monoid = enumerate_monoid(n);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < monoid.size(); ++i) index[monoid[i].images()] = static_cast<int>(i);

  using Cell = std::pair<int, int>;  // (source index, target index)
  std::set<Cell> seen;
  std::deque<Cell> work;
  // Indexed by source / target for vertical composition lookups.
  std::vector<std::vector<int>> by_src(monoid.size()), by_tgt(monoid.size());
  std::vector<Cell> cells;

  auto add = [&](int s, int t) {
    if (seen.insert({s, t}).second) {
      work.push_back({s, t});
      by_src[s].push_back(static_cast<int>(cells.size()));
      by_tgt[t].push_back(static_cast<int>(cells.size()));
      cells.push_back({s, t});
    }
  };

  for (size_t i = 0; i < monoid.size(); ++i) add(static_cast<int>(i), static_cast<int>(i));
  int id = index.at(MonotoneMap::identity(n).images());
  for (int k = 0; k <= n - 2; ++k) {
    add(index.at(make_coercion(CoKind::G, k, n).images()), id);  // eps_k
    add(id, index.at(make_coercion(CoKind::T, k, n).images()));  // eta_k
  }

  std::vector<MonotoneMap> whisk;
  for (int k = 0; k <= n - 2; ++k) {
    whisk.push_back(make_coercion(CoKind::T, k, n));
    whisk.push_back(make_coercion(CoKind::G, k, n));
  }

  while (!work.empty()) {
    auto [s, t] = work.front();
    work.pop_front();
    // Vertical composition on either side.
    for (int ci : by_src[t]) add(s, cells[ci].second);
    for (int ci : by_tgt[s]) add(cells[ci].first, t);
    // Whiskering with generators; closure under iteration covers all
    // generated endofunctors.
    for (const auto& w : whisk) {
      // Post-compose: components w(alpha_i).
      add(index.at(compose_maps(monoid[s], w).images()), index.at(compose_maps(monoid[t], w).images()));
      // Pre-compose: components alpha_{w(i)}.
      add(index.at(compose_maps(w, monoid[s]).images()), index.at(compose_maps(w, monoid[t]).images()));
    }
  }

  std::vector<NatCell> out;
  out.reserve(cells.size());
  for (auto [s, t] : cells) out.push_back(NatCell{monoid[s], monoid[t]});
  std::sort(out.begin(), out.end());
  return out;
}

bool check_adjunction(const MonotoneMap& F, const MonotoneMap& G) {
  if (F.n() != G.n()) fail(Errc::Arity, "maps live on different chains");
  for (int x = 0; x < F.n(); ++x)
    for (int y = 0; y < F.n(); ++y)
      if ((G(x) <= y) != (x <= F(y))) return false;
  return true;
}

}  // namespace ramrec
