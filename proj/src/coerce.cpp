#include "ramrec/coerce.hpp"

#include <functional>
#include <string>

#include "ramrec/error.hpp"

namespace ramrec {

namespace {

void check_op(CoercionOp c, int n) {
  if (c.k < 0 || c.k > n - 2)
    fail(Errc::Range, "coercion subscript " + std::to_string(c.k) + " out of range for n=" +
                          std::to_string(n));
}

std::string op_show(CoercionOp c) {
  return (c.kind == CoKind::T ? "T" : "G") + std::to_string(c.k);
}

}  // namespace

Obj apply_obj(CoercionOp c, const Obj& x) {
  check_op(c, x.n());
  std::vector<int> a = x.profile();
  if (c.kind == CoKind::T) {
    if (c.k == 0) {
      a[0] = 0;
    } else {
      a[c.k - 1] += a[c.k];
      a[c.k] = 0;
    }
  } else {
    a[c.k + 1] += a[c.k];
    a[c.k] = 0;
  }
  return Obj::of_profile(std::move(a));
}

namespace {

// Level of a factor after c, or -1 when the factor is erased (T_0 only).
int factor_level_after(CoercionOp c, int j) {
  if (c.kind == CoKind::T) {
    if (j != c.k) return j;
    return c.k - 1;  // -1 when k = 0: erased
  }
  return j == c.k ? j + 1 : j;
}

TermPtr coerce_recursion(CoercionOp c, const TermPtr& t);
TermPtr coerce_raise(CoercionOp c, const TermPtr& t);

}  // namespace

TermPtr apply_mor(CoercionOp c, const TermPtr& f) {
  int n = f->n();
  check_op(c, n);
  switch (f->kind()) {
    case Tk::Id:
      return id(apply_obj(c, f->dom()));
    case Tk::Left:
      return left_unit(apply_obj(c, f->objs()[0]));
    case Tk::Eraser:
      return eraser(apply_obj(c, f->objs()[0]));
    case Tk::Dup:
      return dup(apply_obj(c, f->objs()[0]));
    case Tk::Sym:
      return sym(apply_obj(c, f->objs()[0]), apply_obj(c, f->objs()[1]));
    case Tk::Assoc:
      return assoc(apply_obj(c, f->objs()[0]), apply_obj(c, f->objs()[1]),
                   apply_obj(c, f->objs()[2]));
    case Tk::Zero: {
      int j = factor_level_after(c, f->level());
      return j < 0 ? id(Obj::unit(n)) : zero(n, j);
    }
    case Tk::Succ: {
      int j = factor_level_after(c, f->level());
      return j < 0 ? id(Obj::unit(n)) : succ(n, j);
    }
    case Tk::Drop: {
      int j = f->level();  // d_j : N_{j+1} -> N_j
      if (c.kind == CoKind::T) {
        if (c.k == j) {
          // Both endpoints step down; at the bottom the target vanishes.
          return j == 0 ? eraser(Obj::level(n, 1)) : comp(drop(n, j - 1), drop(n, j));
        }
        if (c.k == j + 1) return id(Obj::level(n, j));  // T_{j+1} d_j
        return f;
      }
      if (c.k == j) return id(Obj::level(n, j + 1));          // G_j d_j
      if (c.k == j + 1) return comp(drop(n, j), drop(n, j + 1));  // G_{j+1} d_j
      return f;
    }
    case Tk::Comp:
      return comp(apply_mor(c, f->kids()[0]), apply_mor(c, f->kids()[1]));
    case Tk::Tensor:
      return tensor_mor(apply_mor(c, f->kids()[0]), apply_mor(c, f->kids()[1]));
    case Tk::FlatRec:
    case Tk::SafeRec:
    case Tk::DepRec:
    case Tk::ParamRec:
      return coerce_recursion(c, f);
    case Tk::Raise:
      return coerce_raise(c, f);
    case Tk::Lower: {
      // Treat the inner T-image as its expansion.
      TermPtr inner = apply_mor({CoKind::T, f->level()}, f->kids()[0]);
      return apply_mor(c, inner);
    }
  }
  fail(Errc::Type, "unreachable term kind");
}

namespace {

// Last resort for T over a node that cannot be pushed through structurally.
TermPtr t_fallback(CoercionOp c, const TermPtr& t, const std::string& what) {
  Obj d = apply_obj(c, t->dom());
  Obj e = apply_obj(c, t->cod());
  if (e.is_unit()) return e == d ? id(d) : eraser(d);  // unit is terminal
  if (d == t->dom() && e == t->cod()) return t;        // endpoints untouched
  fail(Errc::Strictness, op_show(c) + " cannot act on " + what + " of type " +
                             t->type().show());
}

TermPtr coerce_recursion(CoercionOp c, const TermPtr& t) {
  // Recursion variable: N_j for flat recursion, N_{j+1} for the safe formers.
  int j = t->level();
  int var = t->kind() == Tk::FlatRec ? j : j + 1;
  int var2 = factor_level_after(c, var);
  int j2 = t->kind() == Tk::FlatRec ? var2 : var2 - 1;
  int hi = t->kind() == Tk::FlatRec ? t->n() - 1 : t->n() - 2;
  if (var2 >= 0 && j2 >= 0 && j2 <= hi) {
    try {
      TermPtr g = apply_mor(c, t->kids()[0]);
      TermPtr h = apply_mor(c, t->kids()[1]);
      switch (t->kind()) {
        case Tk::FlatRec: return flat_rec(j2, g, h);
        case Tk::SafeRec: return safe_rec(j2, g, h);
        case Tk::DepRec: return dep_rec(j2, g, h);
        default: return param_rec(j2, g, h);
      }
    } catch (const Error&) {
      // side condition or child coercion failed; fall through
    }
  }
  if (c.kind == CoKind::G) return raise_arrow(c.k, t);
  return t_fallback(c, t, "a recursion node");
}

TermPtr coerce_raise(CoercionOp c, const TermPtr& t) {
  int m = t->level();
  const TermPtr& inner = t->kids()[0];
  // Push the formal G-image inside first; if that makes progress the result
  // is an ordinary term c can act on.
  TermPtr pushed = apply_mor({CoKind::G, m}, inner);
  if (!(pushed->kind() == Tk::Raise && pushed->level() == m &&
        equal_terms(pushed->kids()[0], inner)))
    return apply_mor(c, pushed);
  if (c.kind == CoKind::G) return raise_arrow(c.k, t);
  return t_fallback(c, t, "a formal raise");
}

}  // namespace

Obj apply_word_obj(const std::vector<CoercionOp>& w, const Obj& x) {
  Obj cur = x;
  for (auto c : w) cur = apply_obj(c, cur);
  return cur;
}

TermPtr apply_word_mor(const std::vector<CoercionOp>& w, const TermPtr& f) {
  TermPtr cur = f;
  for (auto c : w) cur = apply_mor(c, cur);
  return cur;
}

std::vector<int> level_action(const MonotoneMap& u) {
  int n = u.n();
  std::vector<int> act(n, -1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (u(i) <= j) act[j] = i;
  return act;
}

namespace {

// Tensor of per-factor maps over the factors of x in canonical order.
TermPtr factorwise(const Obj& x, const std::function<TermPtr(int)>& piece) {
  int n = x.n();
  TermPtr acc;
  for (int j = n - 1; j >= 0; --j)
    for (int c = 0; c < x.alpha(j); ++c) {
      TermPtr p = piece(j);
      acc = acc ? tensor_mor(p, acc) : p;
    }
  return acc ? acc : id(Obj::unit(n));
}

}  // namespace

TermPtr eta_component(int k, const Obj& x) {
  check_op({CoKind::T, k}, x.n());
  int n = x.n();
  return factorwise(x, [&](int j) -> TermPtr {
    if (j != k) return id(Obj::level(n, j));
    return k == 0 ? eraser(Obj::level(n, 0)) : drop(n, k - 1);
  });
}

TermPtr eps_component(int k, const Obj& x) {
  check_op({CoKind::G, k}, x.n());
  int n = x.n();
  return factorwise(x, [&](int j) -> TermPtr {
    return j == k ? drop(n, k) : id(Obj::level(n, j));
  });
}

TermPtr chi(int k, const Obj& x) {
  return simplify_identities(comp(eta_component(k, x), eps_component(k, x)));
}

std::vector<CoercionOp> bar_word(int k, int n) {
  if (k < 0 || k > n - 1) fail(Errc::Range, "bar subscript out of range");
  std::vector<CoercionOp> w;
  for (int j = k - 1; j >= 0; --j) w.push_back({CoKind::T, j});
  for (int j = k; j <= n - 2; ++j) w.push_back({CoKind::G, j});
  return w;
}

Obj bar_obj(int k, const Obj& x) { return apply_word_obj(bar_word(k, x.n()), x); }

TermPtr bar_mor(int k, const TermPtr& f) {
  auto w = bar_word(k, f->n());
  try {
    return apply_word_mor(w, f);
  } catch (const Error&) {
    // A stuck T-step is harmless when the word erases the codomain anyway:
    // the unit is terminal, so the eraser is the composite.
    if (!apply_word_obj(w, f->cod()).is_unit()) throw;
    return eraser(apply_word_obj(w, f->dom()));
  }
}

std::pair<TermPtr, TermPtr> safe_comp_square(const TermPtr& f, int k) {
  int n = f->n();
  check_op({CoKind::T, k}, n);
  const Obj& y = f->cod();
  int m = y.max_level();
  if (!y.pure_power_of(m) || y.is_unit())
    fail(Errc::Type, "square needs a pure-power codomain, got " + y.show());
  if (k > m - 1)
    fail(Errc::Range, "stage " + std::to_string(k) + " would disturb a level-" +
                          std::to_string(m) + " codomain");
  std::vector<CoercionOp> w;
  for (int j = k - 1; j >= 0; --j) w.push_back({CoKind::T, j});
  std::vector<CoercionOp> wt = w;
  wt.insert(wt.begin(), {CoKind::T, k});
  TermPtr first = comp(apply_word_mor(wt, f), apply_word_mor(w, eta_component(k, f->dom())));
  TermPtr second = comp(apply_word_mor(w, eta_component(k, f->cod())), apply_word_mor(w, f));
  return {first, second};
}

}  // namespace ramrec
