#include "ramrec/chain_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ramrec/error.hpp"

namespace ramrec {

namespace {

int index_of(const Fin& s, int token) {
  auto it = std::lower_bound(s.begin(), s.end(), token);
  if (it == s.end() || *it != token) fail(Errc::Shape, "token not in carrier");
  return static_cast<int>(it - s.begin());
}

// Domain and codomain carrier indices of connecting map i under the flag.
std::pair<int, int> map_ends(bool presheaf, int i) {
  return presheaf ? std::pair<int, int>{i + 1, i} : std::pair<int, int>{i, i + 1};
}

FinMap identity_on(const Fin& s) {
  FinMap m;
  for (int t : s) m[t] = t;
  return m;
}

FinMap compose_fin(const FinMap& second, const FinMap& first) {
  FinMap out;
  for (const auto& [t, mid] : first) out[t] = second.at(mid);
  return out;
}

void check_total(const FinMap& m, const Fin& dom, const Fin& cod, const char* what) {
  if (m.size() != dom.size()) fail(Errc::Shape, std::string(what) + ": map not total");
  for (const auto& [t, u] : m) {
    if (!std::binary_search(dom.begin(), dom.end(), t))
      fail(Errc::Shape, std::string(what) + ": spurious token");
    if (!std::binary_search(cod.begin(), cod.end(), u))
      fail(Errc::Shape, std::string(what) + ": image outside codomain");
  }
}

}  // namespace

ChainObj ChainObj::make(int n, bool presheaf, std::vector<Fin> sets,
                        std::vector<FinMap> maps) {
  if (n < 1) fail(Errc::Range, "chain length must be positive");
  if (static_cast<int>(sets.size()) != n || static_cast<int>(maps.size()) != n - 1)
    fail(Errc::Arity, "chain needs n carriers and n-1 maps");
  for (auto& s : sets) {
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end())
      fail(Errc::Shape, "carrier tokens must be sorted and distinct");
    if (s.empty()) fail(Errc::Shape, "carriers must be nonempty");
  }
  for (int i = 0; i < n - 1; ++i) {
    auto [d, c] = map_ends(presheaf, i);
    check_total(maps[i], sets[d], sets[c], "connecting map");
  }
  return ChainObj{n, presheaf, std::move(sets), std::move(maps)};
}

std::string ChainObj::show() const {
  std::ostringstream os;
  const char* arrow = presheaf ? "<-" : "->";
  for (int i = 0; i < n; ++i) {
    if (i) os << arrow;
    os << '{' << sets[i].size() << '}';
  }
  return os.str();
}

ChainMor ChainMor::make(ChainObj dom, ChainObj cod, std::vector<FinMap> comps) {
  if (dom.n != cod.n || dom.presheaf != cod.presheaf)
    fail(Errc::Arity, "morphism endpoints disagree in shape");
  if (static_cast<int>(comps.size()) != dom.n)
    fail(Errc::Arity, "morphism needs one component per carrier");
  for (int i = 0; i < dom.n; ++i)
    check_total(comps[i], dom.sets[i], cod.sets[i], "component");
  for (int i = 0; i < dom.n - 1; ++i) {
    auto [d, c] = map_ends(dom.presheaf, i);
    for (int t : dom.sets[d]) {
      if (cod.maps[i].at(comps[d].at(t)) != comps[c].at(dom.maps[i].at(t)))
        fail(Errc::Shape, "naturality square " + std::to_string(i) + " does not commute");
    }
  }
  return ChainMor{std::move(dom), std::move(cod), std::move(comps)};
}

ChainObj chain_unit(int n, bool presheaf) {
  std::vector<Fin> sets(n, Fin{0});
  std::vector<FinMap> maps(n - 1, FinMap{{0, 0}});
  return ChainObj::make(n, presheaf, std::move(sets), std::move(maps));
}

ChainObj chain_tensor(const ChainObj& a, const ChainObj& b) {
  if (a.n != b.n) fail(Errc::Arity, "tensor of chains of different length");
  if (a.presheaf != b.presheaf) fail(Errc::Type, "tensor of chains of different orientation");
  std::vector<Fin> sets(a.n);
  for (int i = 0; i < a.n; ++i) {
    Fin s(a.sets[i].size() * b.sets[i].size());
    std::iota(s.begin(), s.end(), 0);
    sets[i] = std::move(s);
  }
  std::vector<FinMap> maps(a.n - 1);
  for (int i = 0; i < a.n - 1; ++i) {
    auto [d, c] = map_ends(a.presheaf, i);
    int bd = static_cast<int>(b.sets[d].size());
    int bc = static_cast<int>(b.sets[c].size());
    for (int ia = 0; ia < static_cast<int>(a.sets[d].size()); ++ia)
      for (int ib = 0; ib < bd; ++ib) {
        int ja = index_of(a.sets[c], a.maps[i].at(a.sets[d][ia]));
        int jb = index_of(b.sets[c], b.maps[i].at(b.sets[d][ib]));
        maps[i][ia * bd + ib] = ja * bc + jb;
      }
  }
  return ChainObj::make(a.n, a.presheaf, std::move(sets), std::move(maps));
}

ChainMor chain_id(const ChainObj& a) {
  std::vector<FinMap> comps;
  comps.reserve(a.n);
  for (const auto& s : a.sets) comps.push_back(identity_on(s));
  return ChainMor::make(a, a, std::move(comps));
}

ChainMor chain_compose(const ChainMor& g, const ChainMor& f) {
  if (!(f.cod == g.dom)) fail(Errc::Type, "chain composition endpoints disagree");
  std::vector<FinMap> comps(f.dom.n);
  for (int i = 0; i < f.dom.n; ++i) comps[i] = compose_fin(g.comps[i], f.comps[i]);
  return ChainMor::make(f.dom, g.cod, std::move(comps));
}

ChainMor chain_tensor_mor(const ChainMor& f, const ChainMor& g) {
  ChainObj dom = chain_tensor(f.dom, g.dom);
  ChainObj cod = chain_tensor(f.cod, g.cod);
  std::vector<FinMap> comps(dom.n);
  for (int i = 0; i < dom.n; ++i) {
    int gd = static_cast<int>(g.dom.sets[i].size());
    int gc = static_cast<int>(g.cod.sets[i].size());
    for (int ia = 0; ia < static_cast<int>(f.dom.sets[i].size()); ++ia)
      for (int ib = 0; ib < gd; ++ib) {
        int ja = index_of(f.cod.sets[i], f.comps[i].at(f.dom.sets[i][ia]));
        int jb = index_of(g.cod.sets[i], g.comps[i].at(g.dom.sets[i][ib]));
        comps[i][ia * gd + ib] = ja * gc + jb;
      }
  }
  return ChainMor::make(std::move(dom), std::move(cod), std::move(comps));
}

ChainMor chain_sym(const ChainObj& a, const ChainObj& b) {
  ChainObj dom = chain_tensor(a, b);
  ChainObj cod = chain_tensor(b, a);
  std::vector<FinMap> comps(a.n);
  for (int i = 0; i < a.n; ++i) {
    int bs = static_cast<int>(b.sets[i].size());
    int as = static_cast<int>(a.sets[i].size());
    for (int ia = 0; ia < as; ++ia)
      for (int ib = 0; ib < bs; ++ib) comps[i][ia * bs + ib] = ib * as + ia;
  }
  return ChainMor::make(std::move(dom), std::move(cod), std::move(comps));
}

ChainMor chain_left(const ChainObj& a) {
  ChainObj dom = chain_tensor(chain_unit(a.n, a.presheaf), a);
  std::vector<FinMap> comps(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int ia = 0; ia < static_cast<int>(a.sets[i].size()); ++ia)
      comps[i][ia] = a.sets[i][ia];
  return ChainMor::make(std::move(dom), a, std::move(comps));
}

namespace {

void check_splice(int k, const ChainObj& a, bool want_presheaf) {
  if (a.presheaf != want_presheaf)
    fail(Errc::Type, want_presheaf ? "operator acts on presheaf chains"
                                   : "operator acts on ascending chains");
  if (k < 0 || k > a.n - 2) fail(Errc::Range, "splice index out of range");
}

}  // namespace

ChainObj apply_Te(int k, const ChainObj& a) {
  check_splice(k, a, false);
  std::vector<Fin> sets = a.sets;
  sets[k] = a.sets[k + 1];
  std::vector<FinMap> maps = a.maps;
  if (k >= 1) maps[k - 1] = compose_fin(a.maps[k], a.maps[k - 1]);
  maps[k] = identity_on(a.sets[k + 1]);
  return ChainObj::make(a.n, false, std::move(sets), std::move(maps));
}

ChainObj apply_Ge(int k, const ChainObj& a) {
  check_splice(k, a, false);
  std::vector<Fin> sets = a.sets;
  sets[k + 1] = a.sets[k];
  std::vector<FinMap> maps = a.maps;
  maps[k] = identity_on(a.sets[k]);
  if (k + 1 <= a.n - 2) maps[k + 1] = compose_fin(a.maps[k + 1], a.maps[k]);
  return ChainObj::make(a.n, false, std::move(sets), std::move(maps));
}

ChainMor apply_Te(int k, const ChainMor& f) {
  std::vector<FinMap> comps = f.comps;
  comps[k] = f.comps[k + 1];
  return ChainMor::make(apply_Te(k, f.dom), apply_Te(k, f.cod), std::move(comps));
}

ChainMor apply_Ge(int k, const ChainMor& f) {
  std::vector<FinMap> comps = f.comps;
  comps[k + 1] = f.comps[k];
  return ChainMor::make(apply_Ge(k, f.dom), apply_Ge(k, f.cod), std::move(comps));
}

ChainMor eta_e(int k, const ChainObj& a) {
  check_splice(k, a, false);
  std::vector<FinMap> comps;
  comps.reserve(a.n);
  for (const auto& s : a.sets) comps.push_back(identity_on(s));
  comps[k] = a.maps[k];
  return ChainMor::make(a, apply_Te(k, a), std::move(comps));
}

ChainMor eps_e(int k, const ChainObj& a) {
  check_splice(k, a, false);
  std::vector<FinMap> comps;
  comps.reserve(a.n);
  for (const auto& s : a.sets) comps.push_back(identity_on(s));
  comps[k + 1] = a.maps[k];
  return ChainMor::make(apply_Ge(k, a), a, std::move(comps));
}

std::vector<ChainObj> levels_of(const Fin& x, int n) {
  std::vector<ChainObj> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    std::vector<Fin> sets(n);
    std::vector<FinMap> maps(n - 1);
    for (int j = 0; j < n; ++j) sets[j] = j <= k ? x : Fin{0};
    for (int j = 0; j < n - 1; ++j) {
      if (j < k) {
        maps[j] = identity_on(x);
      } else if (j == k) {
        for (int t : x) maps[j][t] = 0;
      } else {
        maps[j] = FinMap{{0, 0}};
      }
    }
    out.push_back(ChainObj::make(n, false, std::move(sets), std::move(maps)));
  }
  return out;
}

ChainObj reverse_chain(const ChainObj& a) {
  std::vector<Fin> sets(a.sets.rbegin(), a.sets.rend());
  std::vector<FinMap> maps(a.maps.rbegin(), a.maps.rend());
  return ChainObj::make(a.n, !a.presheaf, std::move(sets), std::move(maps));
}

ChainMor reverse_chain(const ChainMor& f) {
  std::vector<FinMap> comps(f.comps.rbegin(), f.comps.rend());
  return ChainMor::make(reverse_chain(f.dom), reverse_chain(f.cod), std::move(comps));
}

ChainObj presheaf_coercion(CoKind c, int k, const ChainObj& a) {
  check_splice(k, a, true);
  ChainObj r = reverse_chain(a);
  return reverse_chain(c == CoKind::T ? apply_Te(k, r) : apply_Ge(k, r));
}

ChainMor presheaf_coercion(CoKind c, int k, const ChainMor& f) {
  check_splice(k, f.dom, true);
  ChainMor r = reverse_chain(f);
  return reverse_chain(c == CoKind::T ? apply_Te(k, r) : apply_Ge(k, r));
}

ChainMor eta_hat(int k, const ChainObj& a) {
  check_splice(k, a, true);
  return reverse_chain(eta_e(k, reverse_chain(a)));
}

ChainMor eps_hat(int k, const ChainObj& a) {
  check_splice(k, a, true);
  return reverse_chain(eps_e(k, reverse_chain(a)));
}

std::vector<ChainObj> levels_of_presheaf(const Fin& x, int n) {
  std::vector<ChainObj> out;
  for (const auto& c : levels_of(x, n)) out.push_back(reverse_chain(c));
  return out;
}

ChainObj nat_chain(int k, int n, int bound) {
  if (k < 0 || k > n - 1) fail(Errc::Range, "level out of range");
  if (bound < 1) fail(Errc::Range, "bound must be positive");
  Fin seg(bound + 1);
  std::iota(seg.begin(), seg.end(), 0);
  return levels_of_presheaf(seg, n)[k];
}

ChainMor zero_chain(int k, int n, int bound) {
  ChainObj cod = nat_chain(k, n, bound);
  ChainObj dom = chain_unit(n, true);
  std::vector<FinMap> comps(n, FinMap{{0, 0}});
  return ChainMor::make(std::move(dom), std::move(cod), std::move(comps));
}

ChainMor succ_chain(int k, int n, int bound) {
  ChainObj x = nat_chain(k, n, bound);
  std::vector<FinMap> comps(n);
  for (int j = 0; j < n; ++j)
    for (int t : x.sets[j]) comps[j][t] = x.sets[j].size() == 1 ? t : std::min(t + 1, bound);
  return ChainMor::make(x, x, std::move(comps));
}

ChainObj apply_word_chain(const std::vector<CoercionOp>& w, const ChainObj& a) {
  ChainObj cur = a;
  for (const auto& op : w)
    cur = cur.presheaf ? presheaf_coercion(op.kind, op.k, cur)
                       : (op.kind == CoKind::T ? apply_Te(op.k, cur) : apply_Ge(op.k, cur));
  return cur;
}

ChainMor apply_word_chain(const std::vector<CoercionOp>& w, const ChainMor& f) {
  ChainMor cur = f;
  for (const auto& op : w)
    cur = cur.dom.presheaf
              ? presheaf_coercion(op.kind, op.k, cur)
              : (op.kind == CoKind::T ? apply_Te(op.k, cur) : apply_Ge(op.k, cur));
  return cur;
}

namespace {

// Every presheaf chain over carriers {0..s-1}, s <= bound.
std::vector<ChainObj> all_presheaf_chains(int n, int bound) {
  std::vector<ChainObj> out;
  std::vector<int> sizes(n, 1);
  auto carriers = [&]() {
    std::vector<Fin> sets(n);
    for (int i = 0; i < n; ++i) {
      sets[i].resize(sizes[i]);
      std::iota(sets[i].begin(), sets[i].end(), 0);
    }
    return sets;
  };
  while (true) {
    std::vector<Fin> sets = carriers();
    // odometer over all n-1 connecting maps, map i: sets[i+1] -> sets[i]
    std::vector<std::vector<int>> choice(n - 1);
    for (int i = 0; i < n - 1; ++i) choice[i].assign(sets[i + 1].size(), 0);
    while (true) {
      std::vector<FinMap> maps(n - 1);
      for (int i = 0; i < n - 1; ++i)
        for (size_t t = 0; t < choice[i].size(); ++t)
          maps[i][static_cast<int>(t)] = choice[i][t];
      out.push_back(ChainObj::make(n, true, sets, std::move(maps)));
      int i = 0, t = 0;
      for (i = 0; i < n - 1; ++i) {
        bool moved = false;
        for (t = 0; t < static_cast<int>(choice[i].size()); ++t) {
          if (choice[i][t] + 1 < static_cast<int>(sets[i].size())) {
            ++choice[i][t];
            for (int r = 0; r < t; ++r) choice[i][r] = 0;
            moved = true;
            break;
          }
          choice[i][t] = 0;
        }
        if (moved) break;
      }
      if (i == n - 1) break;
    }
    int j = 0;
    for (j = 0; j < n; ++j) {
      if (sizes[j] + 1 <= bound) {
        ++sizes[j];
        for (int r = 0; r < j; ++r) sizes[r] = 1;
        break;
      }
      sizes[j] = 1;
    }
    if (j == n) break;
  }
  return out;
}

// Every natural transformation between two presheaf chains.
std::vector<ChainMor> all_mors(const ChainObj& a, const ChainObj& b) {
  std::vector<ChainMor> out;
  std::vector<std::vector<int>> choice(a.n);
  for (int i = 0; i < a.n; ++i) choice[i].assign(a.sets[i].size(), 0);
  while (true) {
    std::vector<FinMap> comps(a.n);
    for (int i = 0; i < a.n; ++i)
      for (size_t t = 0; t < choice[i].size(); ++t)
        comps[i][a.sets[i][t]] = b.sets[i][choice[i][t]];
    bool natural = true;
    for (int i = 0; i < a.n - 1 && natural; ++i) {
      auto [d, c] = map_ends(a.presheaf, i);
      for (int t : a.sets[d])
        if (b.maps[i].at(comps[d].at(t)) != comps[c].at(a.maps[i].at(t))) {
          natural = false;
          break;
        }
    }
    if (natural) out.push_back(ChainMor{a, b, std::move(comps)});
    int i = 0, t = 0;
    for (i = 0; i < a.n; ++i) {
      bool moved = false;
      for (t = 0; t < static_cast<int>(choice[i].size()); ++t) {
        if (choice[i][t] + 1 < static_cast<int>(b.sets[i].size())) {
          ++choice[i][t];
          for (int r = 0; r < t; ++r) choice[i][r] = 0;
          moved = true;
          break;
        }
        choice[i][t] = 0;
      }
      if (moved) break;
    }
    if (i == a.n) break;
  }
  return out;
}

}  // namespace

LawReport comprehension_laws(int n, int bound) {
  LawReport rep;
  ChainObj unit = chain_unit(n, true);

  {
    bool ok = true;
    for (int k = 0; k <= n - 2 && ok; ++k)
      ok = presheaf_coercion(CoKind::T, k, unit) == unit &&
           presheaf_coercion(CoKind::G, k, unit) == unit;
    rep.add("unit chain fixed by every coercion", ok);
  }
  {
    bool ok = true;
    for (int k = 0; k <= n - 2 && ok; ++k)
      ok = eta_hat(k, unit) == chain_id(unit) && eps_hat(k, unit) == chain_id(unit);
    rep.add("unit and counit collapse at the unit chain", ok);
  }

  std::vector<ChainObj> chains = all_presheaf_chains(n, bound);

  {
    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < chains.size() && ok; ++i)
      for (size_t j = 0; j < chains.size() && ok; ++j) {
        for (int k = 0; k <= n - 2 && ok; ++k) {
          ChainObj lhs =
              presheaf_coercion(CoKind::T, k, chain_tensor(chains[i], chains[j]));
          ChainObj rhs = chain_tensor(presheaf_coercion(CoKind::T, k, chains[i]),
                                      presheaf_coercion(CoKind::T, k, chains[j]));
          ChainObj lhs2 =
              presheaf_coercion(CoKind::G, k, chain_tensor(chains[i], chains[j]));
          ChainObj rhs2 = chain_tensor(presheaf_coercion(CoKind::G, k, chains[i]),
                                       presheaf_coercion(CoKind::G, k, chains[j]));
          ok = lhs == rhs && lhs2 == rhs2;
          if (!ok) detail = chains[i].show() + " (x) " + chains[j].show();
        }
      }
    rep.add("coercions distribute over the tensor", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    long long checked = 0;
    for (const auto& a : chains)
      for (const auto& b : chains) {
        for (const auto& f : all_mors(a, b)) {
          ++checked;
          for (int k = 0; k <= n - 2; ++k) {
            ChainMor lhs = chain_compose(presheaf_coercion(CoKind::T, k, f), eta_hat(k, a));
            ChainMor rhs = chain_compose(eta_hat(k, b), f);
            if (!(lhs == rhs)) {
              ok = false;
              detail = "unit naturality fails at " + a.show() + " -> " + b.show();
            }
            ChainMor lhs2 = chain_compose(f, eps_hat(k, a));
            ChainMor rhs2 = chain_compose(eps_hat(k, b), presheaf_coercion(CoKind::G, k, f));
            if (!(lhs2 == rhs2)) {
              ok = false;
              detail = "counit naturality fails at " + a.show() + " -> " + b.show();
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    rep.add("unit and counit natural on every enumerated morphism", ok,
            ok ? std::to_string(checked) + " morphisms" : detail);
  }

  {
    // T and G images of the counting chains land on the neighbouring level,
    // matching the term calculus rules.
    bool ok = true;
    std::string detail;
    int clip = 3;
    for (int k = 0; k <= n - 1 && ok; ++k) {
      ChainMor z = zero_chain(k, n, clip);
      ChainMor s = succ_chain(k, n, clip);
      for (int j = 0; j <= n - 2 && ok; ++j) {
        ChainMor tz = presheaf_coercion(CoKind::T, j, z);
        ChainMor ts = presheaf_coercion(CoKind::T, j, s);
        ChainMor gz = presheaf_coercion(CoKind::G, j, z);
        ChainMor gs = presheaf_coercion(CoKind::G, j, s);
        if (j == k) {
          ok = k == 0 ? tz == chain_id(unit)
                      : tz == zero_chain(k - 1, n, clip) && ts == succ_chain(k - 1, n, clip);
          if (ok && k == 0) ok = ts == chain_id(unit);
          if (ok) ok = gz == zero_chain(k + 1, n, clip) && gs == succ_chain(k + 1, n, clip);
        } else {
          ok = tz == z && ts == s && gz == z && gs == s;
        }
        if (!ok) detail = "level " + std::to_string(k) + ", op index " + std::to_string(j);
      }
    }
    rep.add("counting chains move levelwise under the coercions", ok, detail);
  }

  {
    // Words of bounded length that collapse to the same monotone map must act
    // identically on every enumerated chain.
    int len = 3;
    std::vector<CoercionOp> gens;
    for (int k = 0; k <= n - 2; ++k) {
      gens.push_back({CoKind::T, k});
      gens.push_back({CoKind::G, k});
    }
    std::vector<std::vector<CoercionOp>> words{{}};
    std::vector<std::vector<CoercionOp>> frontier{{}};
    for (int l = 0; l < len; ++l) {
      std::vector<std::vector<CoercionOp>> next;
      for (const auto& w : frontier)
        for (const auto& g : gens) {
          auto w2 = w;
          w2.push_back(g);
          next.push_back(w2);
          words.push_back(std::move(w2));
        }
      frontier = std::move(next);
    }
    // The coercion functors realize the opposite monoid: a word acts leftmost
    // first, so its monoid value composes the generators leftmost-outermost.
    auto func_of = [&](const std::vector<CoercionOp>& w) {
      MonotoneMap u = MonotoneMap::identity(n);
      for (const auto& op : w) u = compose_maps(make_coercion(op.kind, op.k, n), u);
      return u;
    };
    std::map<std::vector<int>, std::vector<const std::vector<CoercionOp>*>> classes;
    for (const auto& w : words) classes[func_of(w).images()].push_back(&w);
    bool ok = true;
    long long pairs = 0;
    std::string detail;
    for (const auto& [tbl, ws] : classes) {
      for (size_t i = 1; i < ws.size() && ok; ++i) {
        ++pairs;
        for (const auto& a : chains) {
          if (!(apply_word_chain(*ws[0], a) == apply_word_chain(*ws[i], a))) {
            ok = false;
            detail = "object " + a.show();
            break;
          }
        }
      }
      if (!ok) break;
    }
    rep.add("equal coercion words act equally on every chain", ok,
            ok ? std::to_string(pairs) + " word pairs" : detail);
  }

  return rep;
}

}  // namespace ramrec
