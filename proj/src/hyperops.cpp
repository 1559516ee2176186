#include "ramrec/hyperops.hpp"

#include "ramrec/error.hpp"

namespace ramrec {

TermPtr numeral(int n, int k, long long m) {
  if (m < 0) fail(Errc::Range, "numeral index must be a natural number");
  TermPtr t = zero(n, k);
  for (long long i = 0; i < m; ++i) t = comp(succ(n, k), t);
  return t;
}

TermPtr const_mor(const Obj& x, int k, long long m) {
  return comp(numeral(x.n(), k, m), eraser(x));
}

TermPtr proj1(const Obj& x, const Obj& y) { return tensor_mor(id(x), eraser(y)); }

TermPtr proj2(const Obj& x, const Obj& y) { return tensor_mor(eraser(x), id(y)); }

TermPtr pair_mor(const TermPtr& f, const TermPtr& g) {
  if (!(f->dom() == g->dom()))
    fail(Errc::Type, "pair needs a shared domain, got " + f->dom().show() + " and " +
                         g->dom().show());
  return comp(tensor_mor(f, g), dup(f->dom()));
}

TermPtr plus_term(int n) { return safe_rec(0, id(Obj::level(n, 0)), succ(n, 0)); }

TermPtr times_term(int n) {
  TermPtr base = const_mor(Obj::level(n, 1), 0, 0);
  return param_rec(0, base, plus_term(n));
}

TermPtr exp_term(int n) {
  TermPtr base = const_mor(Obj::level(n, 1), 1, 1);
  return param_rec(1, base, raise_arrow(0, times_term(n)));
}

TermPtr tetra_term(int n) { return param_rec(2, drop(n, 1), exp_term(n)); }

std::map<std::string, TermPtr> stdlib_terms(int n) {
  std::map<std::string, TermPtr> out;
  out["plus"] = plus_term(n);
  out["times"] = times_term(n);
  out["exp"] = exp_term(n);
  if (n >= 4) out["tetra"] = tetra_term(n);
  return out;
}

TermPtr elaborate_psrr(const TermPtr& t) {
  if (t->kind() != Tk::ParamRec) fail(Errc::Type, "not a parameterized recursion node");
  int k = t->level();
  const TermPtr& g = t->kids()[0];
  const TermPtr& h = t->kids()[1];
  const Obj& x = g->dom();
  const Obj& y = g->cod();
  Obj counter = Obj::level(t->n(), k + 1);
  TermPtr discard = tensor_mor(proj2(counter, x), id(y));
  return dep_rec(k, g, comp(h, discard));
}

}  // namespace ramrec
