#include "ramrec/eval.hpp"

#include <functional>
#include <sstream>

#include "ramrec/coerce.hpp"
#include "ramrec/error.hpp"

namespace ramrec {

LevelTuple LevelTuple::of(const Obj& shape, std::vector<Value> entries) {
  if (static_cast<int>(entries.size()) != shape.factors())
    fail(Errc::Shape, "object " + shape.show() + " holds " + std::to_string(shape.factors()) +
                          " values, got " + std::to_string(entries.size()));
  for (const auto& v : entries)
    if (v < 0) fail(Errc::Range, "entries must be natural numbers");
  return LevelTuple{shape, std::move(entries)};
}

LevelTuple LevelTuple::unit_point(int n) { return LevelTuple{Obj::unit(n), {}}; }

LevelTuple LevelTuple::from_args(const Obj& shape, const std::vector<Value>& args) {
  std::vector<Value> stored;
  stored.reserve(args.size());
  if (static_cast<int>(args.size()) != shape.factors())
    fail(Errc::Shape, shape.show() + " takes " + std::to_string(shape.factors()) +
                          " arguments, got " + std::to_string(args.size()));
  // args run level-descending; storage runs level-ascending.
  int n = shape.n();
  int consumed = 0;
  std::vector<std::vector<Value>> per_level(n);
  for (int j = n - 1; j >= 0; --j)
    for (int c = 0; c < shape.alpha(j); ++c) per_level[j].push_back(args[consumed++]);
  for (int j = 0; j < n; ++j)
    for (auto& v : per_level[j]) stored.push_back(std::move(v));
  return of(shape, std::move(stored));
}

std::vector<Value> LevelTuple::to_args() const {
  std::vector<Value> out;
  out.reserve(entries.size());
  for (int j = shape.n() - 1; j >= 0; --j) {
    int off = level_offset(j);
    for (int c = 0; c < shape.alpha(j); ++c) out.push_back(entries[off + c]);
  }
  return out;
}

int LevelTuple::level_offset(int level) const {
  int off = 0;
  for (int j = 0; j < level; ++j) off += shape.alpha(j);
  return off;
}

std::string LevelTuple::show() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int j = shape.n() - 1; j >= 0; --j) {
    int off = level_offset(j);
    for (int c = 0; c < shape.alpha(j); ++c) {
      if (!first) os << ", ";
      os << entries[off + c] << "@N_" << j;
      first = false;
    }
  }
  os << ')';
  return os.str();
}

namespace {

struct Fueled {
  long long left;
  long long used = 0;
  void burn(const char* what) {
    if (left <= 0) {
      Error e(Errc::Resource, std::string("fuel exhausted during ") + what);
      e.steps = used;
      throw e;
    }
    --left;
    ++used;
  }
};

std::pair<LevelTuple, LevelTuple> split2(const LevelTuple& v, const Obj& d1, const Obj& d2) {
  LevelTuple a{d1, {}}, b{d2, {}};
  int n = v.shape.n();
  int pos = 0;
  for (int j = 0; j < n; ++j) {
    for (int c = 0; c < d1.alpha(j); ++c) a.entries.push_back(v.entries[pos++]);
    for (int c = 0; c < d2.alpha(j); ++c) b.entries.push_back(v.entries[pos++]);
  }
  return {std::move(a), std::move(b)};
}

LevelTuple merge2(const LevelTuple& a, const LevelTuple& b) {
  LevelTuple out{a.shape.tensor(b.shape), {}};
  int n = a.shape.n();
  int pa = 0, pb = 0;
  for (int j = 0; j < n; ++j) {
    for (int c = 0; c < a.shape.alpha(j); ++c) out.entries.push_back(a.entries[pa++]);
    for (int c = 0; c < b.shape.alpha(j); ++c) out.entries.push_back(b.entries[pb++]);
  }
  return out;
}

LevelTuple single(int n, int level, Value m) {
  return LevelTuple{Obj::level(n, level), {std::move(m)}};
}

LevelTuple ev(const TermPtr& t, const LevelTuple& v, Fueled& fuel);

// Counter plus remainder of a recursion domain N_var (x) X.
std::pair<Value, LevelTuple> pop_counter(const TermPtr& t, const LevelTuple& v, int var) {
  Obj x = t->kids()[0]->dom();
  int idx = v.level_offset(var);
  LevelTuple rest{x, {}};
  for (int i = 0; i < static_cast<int>(v.entries.size()); ++i)
    if (i != idx) rest.entries.push_back(v.entries[i]);
  return {v.entries[idx], std::move(rest)};
}

LevelTuple ev(const TermPtr& t, const LevelTuple& v, Fueled& fuel) {
  if (!(v.shape == t->dom()))
    fail(Errc::Shape, "value of shape " + v.shape.show() + " fed to " + t->type().show());
  switch (t->kind()) {
    case Tk::Id:
    case Tk::Left:
    case Tk::Assoc:
      return v;
    case Tk::Zero:
      return single(t->n(), t->level(), 0);
    case Tk::Succ:
      return single(t->n(), t->level(), v.entries[0] + 1);
    case Tk::Eraser:
      return LevelTuple::unit_point(t->n());
    case Tk::Dup:
      return merge2(v, v);
    case Tk::Drop:
      return single(t->n(), t->level(), v.entries[0]);
    case Tk::Sym: {
      auto [a, b] = split2(v, t->objs()[0], t->objs()[1]);
      return merge2(b, a);
    }
    case Tk::Comp:
      return ev(t->kids()[0], ev(t->kids()[1], v, fuel), fuel);
    case Tk::Tensor: {
      auto [a, b] = split2(v, t->kids()[0]->dom(), t->kids()[1]->dom());
      LevelTuple ra = ev(t->kids()[0], a, fuel);
      return merge2(ra, ev(t->kids()[1], b, fuel));
    }
    case Tk::FlatRec: {
      auto [m, x] = pop_counter(t, v, t->level());
      fuel.burn("flat recursion");
      if (m == 0) return ev(t->kids()[0], x, fuel);
      LevelTuple pred = merge2(single(t->n(), t->level(), m - 1), x);
      return ev(t->kids()[1], pred, fuel);
    }
    case Tk::SafeRec: {
      auto [m, x] = pop_counter(t, v, t->level() + 1);
      LevelTuple acc = ev(t->kids()[0], x, fuel);
      for (Value i = 0; i < m; ++i) {
        fuel.burn("iteration");
        acc = ev(t->kids()[1], acc, fuel);
      }
      return acc;
    }
    case Tk::DepRec: {
      auto [m, x] = pop_counter(t, v, t->level() + 1);
      LevelTuple acc = ev(t->kids()[0], x, fuel);
      for (Value i = 0; i < m; ++i) {
        fuel.burn("iteration");
        LevelTuple ctr = merge2(merge2(single(t->n(), t->level() + 1, i), x), acc);
        acc = ev(t->kids()[1], ctr, fuel);
      }
      return acc;
    }
    case Tk::ParamRec: {
      auto [m, x] = pop_counter(t, v, t->level() + 1);
      LevelTuple acc = ev(t->kids()[0], x, fuel);
      for (Value i = 0; i < m; ++i) {
        fuel.burn("iteration");
        acc = ev(t->kids()[1], merge2(x, acc), fuel);
      }
      return acc;
    }
    case Tk::Raise: {
      // Relabel levels down, run the underlying arrow, relabel back up.  The
      // promoted entries sit first within the merged level-(k+1) block.
      int k = t->level();
      const TermPtr& f = t->kids()[0];
      const Obj& d = f->dom();
      LevelTuple inner{d, {}};
      inner.entries.resize(d.factors());
      int n = t->n();
      {
        int src = 0;
        std::vector<std::pair<int, int>> order;  // (dest level, dest offset)
        for (int j = 0; j < n; ++j) {
          if (j == k) continue;
          int take = d.alpha(j) + (j == k + 1 ? d.alpha(k) : 0);
          int promoted = j == k + 1 ? d.alpha(k) : 0;
          for (int c = 0; c < take; ++c) {
            int lvl = c < promoted ? k : j;
            int off = inner.level_offset(lvl) + (c < promoted ? c : c - promoted);
            inner.entries[off] = v.entries[src++];
          }
        }
      }
      LevelTuple mid = ev(f, inner, fuel);
      const Obj& e = f->cod();
      LevelTuple out{apply_obj({CoKind::G, k}, e), {}};
      out.entries.resize(e.factors());
      {
        int dst = 0;
        for (int j = 0; j < n; ++j) {
          if (j == k) continue;
          if (j == k + 1)
            for (int c = 0; c < e.alpha(k); ++c)
              out.entries[dst++] = mid.entries[mid.level_offset(k) + c];
          for (int c = 0; c < e.alpha(j); ++c)
            out.entries[dst++] = mid.entries[mid.level_offset(j) + c];
        }
      }
      return out;
    }
    case Tk::Lower:
      return ev(apply_mor({CoKind::T, t->level()}, t->kids()[0]), v, fuel);
  }
  fail(Errc::Type, "unreachable term kind");
}

}  // namespace

LevelTuple denote(const TermPtr& t, const LevelTuple& v, long long fuel) {
  if (fuel <= 0) fail(Errc::Range, "fuel must be positive");
  Fueled f{fuel};
  return ev(t, v, f);
}

namespace {

// Second interpreter for closed points: values are bare (level, value) lists,
// pipelines are walked iteratively, blocks are moved by index arithmetic.
using Pt = std::vector<std::pair<int, Value>>;

Pt np_run(const TermPtr& t, Pt in, Fueled& fuel);

Pt np_piece(const TermPtr& t, Pt in, Fueled& fuel) {
  const int n = t->n();
  auto level_count = [&](const Obj& o, int j) { return o.alpha(j); };
  switch (t->kind()) {
    case Tk::Id:
    case Tk::Left:
    case Tk::Assoc:
      return in;
    case Tk::Zero:
      return Pt{{t->level(), 0}};
    case Tk::Succ:
      return Pt{{t->level(), in[0].second + 1}};
    case Tk::Eraser:
      return {};
    case Tk::Drop:
      return Pt{{t->level(), in[0].second}};
    case Tk::Dup: {
      Pt out;
      size_t i = 0;
      while (i < in.size()) {
        size_t j = i;
        while (j < in.size() && in[j].first == in[i].first) ++j;
        for (size_t c = i; c < j; ++c) out.push_back(in[c]);
        for (size_t c = i; c < j; ++c) out.push_back(in[c]);
        i = j;
      }
      return out;
    }
    case Tk::Sym: {
      const Obj& x = t->objs()[0];
      const Obj& y = t->objs()[1];
      Pt out;
      size_t pos = 0;
      for (int j = 0; j < n; ++j) {
        size_t ax = level_count(x, j), ay = level_count(y, j);
        for (size_t c = 0; c < ay; ++c) out.push_back(in[pos + ax + c]);
        for (size_t c = 0; c < ax; ++c) out.push_back(in[pos + c]);
        pos += ax + ay;
      }
      return out;
    }
    case Tk::Tensor: {
      const Obj& d1 = t->kids()[0]->dom();
      const Obj& d2 = t->kids()[1]->dom();
      Pt l, r;
      size_t pos = 0;
      for (int j = 0; j < n; ++j) {
        for (int c = 0; c < d1.alpha(j); ++c) l.push_back(in[pos++]);
        for (int c = 0; c < d2.alpha(j); ++c) r.push_back(in[pos++]);
      }
      Pt lo = np_run(t->kids()[0], std::move(l), fuel);
      Pt ro = np_run(t->kids()[1], std::move(r), fuel);
      Pt out;
      size_t pl = 0, pr = 0;
      for (int j = 0; j < n; ++j) {
        while (pl < lo.size() && lo[pl].first == j) out.push_back(lo[pl++]);
        while (pr < ro.size() && ro[pr].first == j) out.push_back(ro[pr++]);
      }
      return out;
    }
    case Tk::FlatRec: {
      int var = t->level();
      size_t idx = 0;
      while (in[idx].first != var) ++idx;
      Value m = in[idx].second;
      Pt rest = in;
      rest.erase(rest.begin() + idx);
      fuel.burn("flat recursion");
      if (m == 0) return np_run(t->kids()[0], std::move(rest), fuel);
      Pt pred;
      bool placed = false;
      for (auto& p : rest) {
        if (!placed && p.first >= var) {
          pred.push_back({var, m - 1});
          placed = true;
        }
        pred.push_back(p);
      }
      if (!placed) pred.push_back({var, m - 1});
      return np_run(t->kids()[1], std::move(pred), fuel);
    }
    case Tk::SafeRec:
    case Tk::DepRec:
    case Tk::ParamRec: {
      int var = t->level() + 1;
      size_t idx = 0;
      while (in[idx].first != var) ++idx;
      Value m = in[idx].second;
      Pt x = in;
      x.erase(x.begin() + idx);
      Pt acc = np_run(t->kids()[0], x, fuel);
      for (Value i = 0; i < m; ++i) {
        fuel.burn("iteration");
        if (t->kind() == Tk::SafeRec) {
          acc = np_run(t->kids()[1], std::move(acc), fuel);
          continue;
        }
        Pt arg;
        if (t->kind() == Tk::DepRec) {
          bool placed = false;
          for (auto& p : x) {
            if (!placed && p.first >= var) {
              arg.push_back({var, i});
              placed = true;
            }
            arg.push_back(p);
          }
          if (!placed) arg.push_back({var, i});
        } else {
          arg = x;
        }
        // Append the accumulator blockwise per level behind the context.
        Pt merged;
        size_t pa = 0, pb = 0;
        for (int j = 0; j < n; ++j) {
          while (pa < arg.size() && arg[pa].first == j) merged.push_back(arg[pa++]);
          while (pb < acc.size() && acc[pb].first == j) merged.push_back(acc[pb++]);
        }
        acc = np_run(t->kids()[1], std::move(merged), fuel);
      }
      return acc;
    }
    case Tk::Raise: {
      int k = t->level();
      const Obj& d = t->kids()[0]->dom();
      Pt inner;
      size_t pos = 0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        int promoted = j == k + 1 ? d.alpha(k) : 0;
        for (int c = 0; c < promoted; ++c) inner.push_back({k, in[pos++].second});
        for (int c = 0; c < d.alpha(j); ++c) inner.push_back({j, in[pos++].second});
      }
      Pt mid = np_run(t->kids()[0], std::move(inner), fuel);
      const Obj& e = t->kids()[0]->cod();
      Pt out;
      size_t pk = 0;
      while (pk < mid.size() && mid[pk].first < k) out.push_back(mid[pk++]);
      size_t firstk = pk;
      for (int c = 0; c < e.alpha(k); ++c) out.push_back({k + 1, mid[firstk + c].second});
      pk = firstk + e.alpha(k);
      while (pk < mid.size()) out.push_back(mid[pk++]);
      return out;
    }
    case Tk::Lower:
      return np_run(apply_mor({CoKind::T, t->level()}, t->kids()[0]), std::move(in), fuel);
    case Tk::Comp:
      break;  // handled by np_run's pipeline
  }
  fail(Errc::Type, "unreachable piece");
}

Pt np_run(const TermPtr& t, Pt in, Fueled& fuel) {
  // Flatten the composition spine and stream the point through it.
  std::vector<TermPtr> pipe;
  std::function<void(const TermPtr&)> flat = [&](const TermPtr& s) {
    if (s->kind() == Tk::Comp) {
      flat(s->kids()[1]);
      flat(s->kids()[0]);
    } else {
      pipe.push_back(s);
    }
  };
  flat(t);
  Pt cur = std::move(in);
  for (const auto& stage : pipe) cur = np_piece(stage, std::move(cur), fuel);
  return cur;
}

}  // namespace

Value normalize_point(const TermPtr& t, long long fuel) {
  if (!t->dom().is_unit() || t->cod().single_level() < 0)
    fail(Errc::Type, "not a closed point of a level object: " + t->type().show());
  Fueled f{fuel};
  Pt out = np_run(t, {}, f);
  if (out.size() != 1 || out[0].first != t->cod().single_level())
    fail(Errc::Shape, "normalization produced a non-numeral result");
  return out[0].second;
}

std::string GammaChain::show() const {
  std::ostringstream os;
  for (size_t i = 0; i < stages.size(); ++i) {
    if (i) os << " -> ";
    os << stages[i].show();
  }
  return os.str();
}

GammaChain gamma_object(const Obj& x) {
  GammaChain g;
  int n = x.n();
  for (int k = 0; k < n; ++k) g.stages.push_back(bar_obj(k, x));
  for (int k = 0; k + 1 < n; ++k) g.maps.push_back(bar_mor(k, chi(k, x)));
  return g;
}

LadderReport gamma_morphism_ladder(const TermPtr& f, const Value& bound, long long fuel) {
  if (f->dom().single_level() < 0 || f->cod().single_level() < 0)
    fail(Errc::Type, "ladder needs single-factor endpoints, got " + f->type().show());
  int n = f->n();
  GammaChain gd = gamma_object(f->dom());
  GammaChain gc = gamma_object(f->cod());
  LadderReport rep;
  for (int k = 0; k + 1 < n; ++k) {
    TermPtr fk = bar_mor(k, f);
    TermPtr fk1 = bar_mor(k + 1, f);
    TermPtr lhs = comp(fk1, gd.maps[k]);
    TermPtr rhs = comp(gc.maps[k], fk);
    const Obj& stage = gd.stages[k];
    std::vector<LevelTuple> points;
    if (stage.is_unit()) {
      points.push_back(LevelTuple::unit_point(n));
    } else {
      for (Value i = 0; i <= bound; ++i)
        points.push_back(single(n, stage.single_level(), i));
    }
    for (const auto& p : points) {
      LevelTuple a = denote(lhs, p, fuel);
      LevelTuple b = denote(rhs, p, fuel);
      if (!(a == b)) {
        rep.ok = false;
        rep.rung = k;
        rep.detail = "input " + p.show() + ": " + a.show() + " vs " + b.show();
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace ramrec
