#include "ramrec/laws.hpp"

#include <random>

#include "ramrec/coerce.hpp"
#include "ramrec/error.hpp"
#include "ramrec/hyperops.hpp"

namespace ramrec {

namespace {

using boost::multiprecision::pow;

// Walks every tuple over dom with entries <= bound, or a seeded sample when
// the space exceeds the cap.  Returns the first disagreement.
std::string first_mismatch(const TermPtr& lhs, const TermPtr& rhs, const Value& bound,
                           long long fuel) {
  const Obj dom = lhs->dom();
  const int factors = dom.factors();
  auto probe = [&](const LevelTuple& v) -> std::string {
    LevelTuple a = denote(lhs, v, fuel);
    LevelTuple b = denote(rhs, v, fuel);
    if (a == b) return "";
    return "at " + v.show() + ": " + a.show() + " vs " + b.show();
  };
  if (factors == 0) return probe(LevelTuple::unit_point(dom.n()));

  Value per = bound + 1;
  Value total = pow(per, static_cast<unsigned>(factors));
  if (total <= kTupleCap) {
    std::vector<Value> entries(factors, 0);
    while (true) {
      std::string bad = probe(LevelTuple::of(dom, entries));
      if (!bad.empty()) return bad;
      int i = 0;
      for (; i < factors; ++i) {
        if (entries[i] + 1 <= bound) {
          ++entries[i];
          for (int r = 0; r < i; ++r) entries[r] = 0;
          break;
        }
      }
      if (i == factors) break;
    }
    return "";
  }
  std::mt19937_64 rng(kSampleSeed);
  unsigned long long m = per.convert_to<unsigned long long>();
  for (long long s = 0; s < kTupleCap; ++s) {
    std::vector<Value> entries(factors);
    for (auto& e : entries) e = Value(rng() % m);
    std::string bad = probe(LevelTuple::of(dom, entries));
    if (!bad.empty()) return bad;
  }
  return "";
}

void check_one(LawReport& rep, const std::string& name, const TermPtr& lhs,
               const TermPtr& rhs, const Value& bound, long long fuel) {
  DiagramCheck c = check_equal(lhs, rhs, bound, fuel);
  rep.add(name, c.pass, c.counterexample);
}

}  // namespace

DiagramCheck check_equal(const TermPtr& lhs, const TermPtr& rhs, const Value& bound,
                         long long fuel) {
  if (!(lhs->type() == rhs->type()))
    fail(Errc::Type, "cannot compare " + lhs->type().show() + " with " + rhs->type().show());
  if (bound < 0) fail(Errc::Range, "bound must be a natural number");
  DiagramCheck out{lhs, rhs, bound, true, ""};
  TermPtr a = simplify_identities(lhs);
  TermPtr b = simplify_identities(rhs);
  if (equal_terms(a, b)) return out;
  out.counterexample = first_mismatch(a, b, bound, fuel);
  out.pass = out.counterexample.empty();
  return out;
}

LawReport comonoid_suite(int k, int n, const Value& bound, long long fuel) {
  Obj c = Obj::level(n, k);
  TermPtr d = dup(c);
  TermPtr e = eraser(c);
  LawReport rep;
  check_one(rep, "right counit", comp(tensor_mor(id(c), e), d), id(c), bound, fuel);
  check_one(rep, "left counit", comp(tensor_mor(e, id(c)), d), id(c), bound, fuel);
  check_one(rep, "coassociativity", comp(tensor_mor(d, id(c)), d),
            comp(tensor_mor(id(c), d), d), bound, fuel);
  check_one(rep, "cocommutativity", comp(sym(c, c), d), d, bound, fuel);
  check_one(rep, "eraser at the unit", eraser(Obj::unit(n)), id(Obj::unit(n)), bound, fuel);
  return rep;
}

LawReport cartesian_suite(const Obj& x, const Obj& y, const Value& bound, long long fuel) {
  Obj w = x.tensor(y);
  TermPtr p1 = proj1(x, y);
  TermPtr p2 = proj2(x, y);
  std::vector<TermPtr> fs{p1};
  if (x.single_level() >= 0) fs.push_back(comp(succ(x.n(), x.single_level()), p1));
  std::vector<TermPtr> gs{p2};
  if (y.single_level() >= 0) gs.push_back(const_mor(w, y.single_level(), 1));

  LawReport rep;
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = 0; j < gs.size(); ++j) {
      std::string tag = " (" + std::to_string(i) + "," + std::to_string(j) + ")";
      TermPtr pr = pair_mor(fs[i], gs[j]);
      check_one(rep, "first projection of pairing" + tag, comp(p1, pr), fs[i], bound, fuel);
      check_one(rep, "second projection of pairing" + tag, comp(p2, pr), gs[j], bound, fuel);
    }
  check_one(rep, "surjective pairing", pair_mor(p1, p2), id(w), bound, fuel);
  {
    TermPtr h = sym(y, x);
    TermPtr pr = pair_mor(fs.back(), gs.back());
    check_one(rep, "pairing fused with a symmetry", comp(pr, h),
              pair_mor(comp(fs.back(), h), comp(gs.back(), h)), bound, fuel);
  }
  {
    TermPtr f = fs.back();
    TermPtr pr = pair_mor(f, f);
    Obj c = f->cod();
    check_one(rep, "equal components project equally", comp(proj1(c, c), pr),
              comp(proj2(c, c), pr), bound, fuel);
  }
  return rep;
}

TermPtr derived_eraser(int level, int n) {
  if (level < 1 || level > n - 1) fail(Errc::Range, "derived eraser needs level 1..n-1");
  Obj top = Obj::unit(n);
  return safe_rec(level - 1, id(top), id(top));
}

TermPtr derived_dup(int level, int n) {
  if (level < 1 || level > n - 1) fail(Errc::Range, "derived duplication needs level 1..n-1");
  int k = level - 1;
  TermPtr f = safe_rec(k, tensor_mor(zero(n, k), zero(n, k)),
                       tensor_mor(succ(n, k), succ(n, k)));
  return apply_mor({CoKind::G, k}, f);
}

LawReport derived_structure_suite(int n, const Value& bound, long long fuel) {
  if (n < 3) fail(Errc::Range, "derived structure needs at least three levels");
  LawReport rep;
  Obj top = Obj::unit(n);
  check_one(rep, "eraser at the unit is the identity", eraser(top), id(top), bound, fuel);
  for (int level = 1; level <= n - 1; ++level) {
    Obj c = Obj::level(n, level);
    check_one(rep, "derived eraser at level " + std::to_string(level),
              derived_eraser(level, n), eraser(c), bound, fuel);
    check_one(rep, "derived duplication at level " + std::to_string(level),
              derived_dup(level, n), dup(c), bound, fuel);
  }
  return rep;
}

LawReport comonoid_morphism_check(const TermPtr& f, const Value& bound, long long fuel) {
  Obj x = f->dom();
  Obj y = f->cod();
  LawReport rep;
  check_one(rep, "duplication square", comp(dup(y), f), comp(tensor_mor(f, f), dup(x)),
            bound, fuel);
  check_one(rep, "eraser triangle", comp(eraser(y), f), eraser(x), bound, fuel);
  return rep;
}

LawReport recursion_diagram_suite(const TermPtr& t, const Value& bound, long long fuel) {
  Tk kind = t->kind();
  if (kind != Tk::FlatRec && kind != Tk::SafeRec && kind != Tk::DepRec &&
      kind != Tk::ParamRec)
    fail(Errc::Type, "diagram suite needs a recursion former");
  const TermPtr& g = t->kids()[0];
  const TermPtr& h = t->kids()[1];
  int n = t->n();
  int var = kind == Tk::FlatRec ? t->level() : t->level() + 1;
  Obj x = g->dom();

  auto with_counter = [&](const TermPtr& head) {
    return x.is_unit() ? head : tensor_mor(head, id(x));
  };
  TermPtr base = comp(t, with_counter(zero(n, var)));
  TermPtr step = comp(t, with_counter(succ(n, var)));

  LawReport rep;
  check_one(rep, "base triangle", base, g, bound, fuel);
  switch (kind) {
    case Tk::FlatRec:
      check_one(rep, "step square", step, h, bound, fuel);
      break;
    case Tk::SafeRec:
      check_one(rep, "step square", step, comp(h, t), bound, fuel);
      break;
    case Tk::DepRec:
      check_one(rep, "step square", step, comp(h, pair_mor(id(t->dom()), t)), bound, fuel);
      break;
    case Tk::ParamRec: {
      TermPtr to_x = tensor_mor(eraser(Obj::level(n, var)), id(x));
      check_one(rep, "step square", step, comp(h, pair_mor(to_x, t)), bound, fuel);
      break;
    }
    default:
      break;
  }
  return rep;
}

}  // namespace ramrec
