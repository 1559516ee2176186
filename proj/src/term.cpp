#include "ramrec/term.hpp"

#include <sstream>

#include "ramrec/error.hpp"

namespace ramrec {

Term::Term(Tk kind, int level, std::vector<Obj> objs, std::vector<TermPtr> kids, MorType type)
    : kind_(kind), level_(level), objs_(std::move(objs)), kids_(std::move(kids)),
      type_(std::move(type)) {
  size_ = 1;
  for (const auto& k : kids_) size_ += k->size();
}

TermPtr make_term(Tk kind, int level, std::vector<Obj> objs, std::vector<TermPtr> kids,
                  MorType type) {
  return TermPtr(new Term(kind, level, std::move(objs), std::move(kids), std::move(type)));
}

namespace {

void check_level(int n, int k, int hi) {
  if (k < 0 || k > hi) fail(Errc::Range, "level subscript out of range for n=" + std::to_string(n));
}

void check_same_n(const TermPtr& a, const TermPtr& b) {
  if (a->n() != b->n()) fail(Errc::Arity, "terms live over different chains");
}

// Side condition shared by the three safe recursion formers: every factor of
// the result type must sit at level k or below, i.e. the descending T-word
// T_k ... T_0 collapses it to the unit.
bool within_levels(const Obj& y, int k) {
  for (int j = k + 1; j < y.n(); ++j)
    if (y.alpha(j) != 0) return false;
  return true;
}

// Object action of the coercion functors, duplicated here so term typing does
// not depend on the coercion engine.
Obj obj_T(int k, const Obj& x) {
  std::vector<int> a = x.profile();
  if (k == 0) {
    a[0] = 0;
  } else {
    a[k - 1] += a[k];
    a[k] = 0;
  }
  return Obj::of_profile(std::move(a));
}

Obj obj_G(int k, const Obj& x) {
  std::vector<int> a = x.profile();
  a[k + 1] += a[k];
  a[k] = 0;
  return Obj::of_profile(std::move(a));
}

}  // namespace

TermPtr id(const Obj& x) { return make_term(Tk::Id, -1, {x}, {}, {x, x}); }

TermPtr zero(int n, int k) {
  check_level(n, k, n - 1);
  return make_term(Tk::Zero, k, {}, {}, {Obj::unit(n), Obj::level(n, k)});
}

TermPtr succ(int n, int k) {
  check_level(n, k, n - 1);
  return make_term(Tk::Succ, k, {}, {}, {Obj::level(n, k), Obj::level(n, k)});
}

TermPtr eraser(const Obj& x) { return make_term(Tk::Eraser, -1, {x}, {}, {x, Obj::unit(x.n())}); }

TermPtr dup(const Obj& x) { return make_term(Tk::Dup, -1, {x}, {}, {x, x.tensor(x)}); }

TermPtr drop(int n, int k) {
  check_level(n, k, n - 2);
  return make_term(Tk::Drop, k, {}, {}, {Obj::level(n, k + 1), Obj::level(n, k)});
}

TermPtr comp(const TermPtr& g, const TermPtr& f) {
  check_same_n(f, g);
  if (!(f->cod() == g->dom()))
    fail(Errc::Type, "composition mismatch: " + f->type().show() + " then " + g->type().show());
  return make_term(Tk::Comp, -1, {}, {g, f}, {f->dom(), g->cod()});
}

TermPtr tensor_mor(const TermPtr& f, const TermPtr& g) {
  check_same_n(f, g);
  return make_term(Tk::Tensor, -1, {}, {f, g},
                   {f->dom().tensor(g->dom()), f->cod().tensor(g->cod())});
}

TermPtr left_unit(const Obj& x) { return make_term(Tk::Left, -1, {x}, {}, {x, x}); }

TermPtr sym(const Obj& x, const Obj& y) {
  if (x.n() != y.n()) fail(Errc::Arity, "objects live over different chains");
  Obj xy = x.tensor(y);
  return make_term(Tk::Sym, -1, {x, y}, {}, {xy, xy});
}

TermPtr assoc(const Obj& x, const Obj& y, const Obj& z) {
  if (x.n() != y.n() || y.n() != z.n()) fail(Errc::Arity, "objects live over different chains");
  Obj xyz = x.tensor(y).tensor(z);
  return make_term(Tk::Assoc, -1, {x, y, z}, {}, {xyz, xyz});
}

TermPtr flat_rec(int k, const TermPtr& g, const TermPtr& h) {
  check_same_n(g, h);
  int n = g->n();
  check_level(n, k, n - 1);
  const Obj& x = g->dom();
  const Obj& y = g->cod();
  if (!x.pure_power_of(k) || !y.pure_power_of(k))
    fail(Errc::Type, "flat recursion needs pure N_" + std::to_string(k) + " powers, got " +
                         g->type().show());
  Obj nx = Obj::level(n, k).tensor(x);
  if (!(h->dom() == nx) || !(h->cod() == y))
    fail(Errc::Type, "flat recursion step has type " + h->type().show() + ", expected " +
                         nx.show() + " -> " + y.show());
  return make_term(Tk::FlatRec, k, {}, {g, h}, {nx, y});
}

namespace {
// Shared checks for the three ramified formers over N_{k+1}.
void check_safe_frame(int n, int k, const TermPtr& g, const char* what) {
  check_level(n, k, n - 2);
  if (!within_levels(g->cod(), k))
    fail(Errc::Type, std::string(what) + " result type " + g->cod().show() +
                         " has a factor above level " + std::to_string(k));
}
}  // namespace

TermPtr safe_rec(int k, const TermPtr& g, const TermPtr& h) {
  check_same_n(g, h);
  int n = g->n();
  check_safe_frame(n, k, g, "safe recursion");
  const Obj& y = g->cod();
  if (!(h->dom() == y) || !(h->cod() == y))
    fail(Errc::Type, "safe recursion step has type " + h->type().show() + ", expected an endomap of " +
                         y.show());
  Obj nx = Obj::level(n, k + 1).tensor(g->dom());
  return make_term(Tk::SafeRec, k, {}, {g, h}, {nx, y});
}

TermPtr dep_rec(int k, const TermPtr& g, const TermPtr& h) {
  check_same_n(g, h);
  int n = g->n();
  check_safe_frame(n, k, g, "dependent recursion");
  const Obj& x = g->dom();
  const Obj& y = g->cod();
  Obj nx = Obj::level(n, k + 1).tensor(x);
  Obj hd = nx.tensor(y);
  if (!(h->dom() == hd) || !(h->cod() == y))
    fail(Errc::Type, "dependent recursion step has type " + h->type().show() + ", expected " +
                         hd.show() + " -> " + y.show());
  return make_term(Tk::DepRec, k, {}, {g, h}, {nx, y});
}

TermPtr param_rec(int k, const TermPtr& g, const TermPtr& h) {
  check_same_n(g, h);
  int n = g->n();
  check_safe_frame(n, k, g, "parameter recursion");
  const Obj& x = g->dom();
  const Obj& y = g->cod();
  Obj hd = x.tensor(y);
  if (!(h->dom() == hd) || !(h->cod() == y))
    fail(Errc::Type, "parameter recursion step has type " + h->type().show() + ", expected " +
                         hd.show() + " -> " + y.show());
  Obj nx = Obj::level(n, k + 1).tensor(x);
  return make_term(Tk::ParamRec, k, {}, {g, h}, {nx, y});
}

TermPtr raise_arrow(int k, const TermPtr& f) {
  int n = f->n();
  check_level(n, k, n - 2);
  return make_term(Tk::Raise, k, {}, {f}, {obj_G(k, f->dom()), obj_G(k, f->cod())});
}

TermPtr lower_arrow(int k, const TermPtr& f) {
  int n = f->n();
  check_level(n, k, n - 2);
  return make_term(Tk::Lower, k, {}, {f}, {obj_T(k, f->dom()), obj_T(k, f->cod())});
}

bool equal_terms(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind() || a->level() != b->level()) return false;
  if (a->objs() != b->objs()) return false;
  if (a->kids().size() != b->kids().size()) return false;
  for (size_t i = 0; i < a->kids().size(); ++i)
    if (!equal_terms(a->kids()[i], b->kids()[i])) return false;
  return true;
}

namespace {

void show_obj_sexpr(const Obj& x, std::ostream& os) {
  if (x.single_level() >= 0) {
    os << "(N " << x.single_level() << ')';
    return;
  }
  os << "(obj";
  for (int j = 0; j < x.n(); ++j)
    for (int c = 0; c < x.alpha(j); ++c) os << " (N " << j << ')';
  os << ')';
}

}  // namespace

std::string Term::show() const {
  std::ostringstream os;
  auto obj = [&](const Obj& x) {
    os << ' ';
    show_obj_sexpr(x, os);
  };
  auto kid = [&](const TermPtr& t) { os << ' ' << t->show(); };
  switch (kind_) {
    case Tk::Id: os << "(id"; obj(objs_[0]); os << ')'; break;
    case Tk::Zero: os << "(zero " << level_ << ')'; break;
    case Tk::Succ: os << "(succ " << level_ << ')'; break;
    case Tk::Eraser: os << "(eraser"; obj(objs_[0]); os << ')'; break;
    case Tk::Dup: os << "(dup"; obj(objs_[0]); os << ')'; break;
    case Tk::Drop: os << "(drop " << level_ << ')'; break;
    case Tk::Comp: os << "(comp"; kid(kids_[0]); kid(kids_[1]); os << ')'; break;
    case Tk::Tensor: os << "(tensor"; kid(kids_[0]); kid(kids_[1]); os << ')'; break;
    case Tk::Left: os << "(left"; obj(objs_[0]); os << ')'; break;
    case Tk::Sym: os << "(sym"; obj(objs_[0]); obj(objs_[1]); os << ')'; break;
    case Tk::Assoc: os << "(assoc"; obj(objs_[0]); obj(objs_[1]); obj(objs_[2]); os << ')'; break;
    case Tk::FlatRec: os << "(fr " << level_; kid(kids_[0]); kid(kids_[1]); os << ')'; break;
    case Tk::SafeRec: os << "(srr " << level_; kid(kids_[0]); kid(kids_[1]); os << ')'; break;
    case Tk::DepRec: os << "(sdr " << level_; kid(kids_[0]); kid(kids_[1]); os << ')'; break;
    case Tk::ParamRec: os << "(psrr " << level_; kid(kids_[0]); kid(kids_[1]); os << ')'; break;
    case Tk::Raise: os << "(raise " << level_; kid(kids_[0]); os << ')'; break;
    case Tk::Lower: os << "(lower " << level_; kid(kids_[0]); os << ')'; break;
  }
  return os.str();
}

namespace {

bool denotes_identity_node(const TermPtr& t) {
  switch (t->kind()) {
    case Tk::Id:
    case Tk::Left:
    case Tk::Assoc:
      return true;
    case Tk::Sym:
      return t->objs()[0].is_unit() || t->objs()[1].is_unit();
    case Tk::Eraser:
    case Tk::Dup:
      return t->objs()[0].is_unit();
    default:
      return false;
  }
}

}  // namespace

TermPtr simplify_identities(const TermPtr& t) {
  switch (t->kind()) {
    case Tk::Comp: {
      TermPtr g = simplify_identities(t->kids()[0]);
      TermPtr f = simplify_identities(t->kids()[1]);
      if (denotes_identity_node(f)) return g;
      if (denotes_identity_node(g)) return f;
      return comp(g, f);
    }
    case Tk::Tensor: {
      TermPtr f = simplify_identities(t->kids()[0]);
      TermPtr g = simplify_identities(t->kids()[1]);
      if (denotes_identity_node(f) && denotes_identity_node(g)) return id(t->dom());
      if (f->dom().is_unit() && f->cod().is_unit()) return g;
      if (g->dom().is_unit() && g->cod().is_unit()) return f;
      return tensor_mor(f, g);
    }
    case Tk::FlatRec:
      return flat_rec(t->level(), simplify_identities(t->kids()[0]),
                      simplify_identities(t->kids()[1]));
    case Tk::SafeRec:
      return safe_rec(t->level(), simplify_identities(t->kids()[0]),
                      simplify_identities(t->kids()[1]));
    case Tk::DepRec:
      return dep_rec(t->level(), simplify_identities(t->kids()[0]),
                     simplify_identities(t->kids()[1]));
    case Tk::ParamRec:
      return param_rec(t->level(), simplify_identities(t->kids()[0]),
                       simplify_identities(t->kids()[1]));
    case Tk::Raise:
      return raise_arrow(t->level(), simplify_identities(t->kids()[0]));
    case Tk::Lower:
      return lower_arrow(t->level(), simplify_identities(t->kids()[0]));
    default: {
      if (denotes_identity_node(t) && t->kind() != Tk::Id && t->dom() == t->cod())
        return id(t->dom());
      return t;
    }
  }
}

Obj normalize_object(int n, const std::vector<int>& factor_levels) {
  std::vector<int> a(n, 0);
  for (int k : factor_levels) {
    if (k < 0 || k >= n) fail(Errc::Range, "level index out of range");
    a[k] += 1;
  }
  return Obj::of_profile(std::move(a));
}

}  // namespace ramrec
