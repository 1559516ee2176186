#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ramrec/object.hpp"

namespace ramrec {

// Arrow constructors of the free level-stratified calculus.  Every node is
// typed at construction; ill-typed combinations throw Errc::Type.
enum class Tk {
  Id,       // 1_X : X -> X
  Zero,     // 0_k : 1 -> N_k
  Succ,     // s_k : N_k -> N_k
  Eraser,   // !_X : X -> 1
  Dup,      // d_X : X -> X(x)X
  Drop,     // N_{k+1} -> N_k, value preserving
  Comp,     // g . f
  Tensor,   // f (x) g, f on the left factor
  Left,     // unitor 1(x)X -> X (identity on profiles)
  Sym,      // X(x)Y -> Y(x)X, per-level block swap
  Assoc,    // (X(x)Y)(x)Z -> X(x)(Y(x)Z) (identity on profiles)
  FlatRec,  // FR_k(g,h)   : N_k(x)X -> Y,     X,Y powers of N_k
  SafeRec,  // SRR_k(g,h)  : N_{k+1}(x)X -> Y, levels of Y <= k
  DepRec,   // SDR_k(g,h)  : N_{k+1}(x)X -> Y, levels of Y <= k
  ParamRec, // PSRR_k(g,h) : N_{k+1}(x)X -> Y, levels of Y <= k
  Raise,    // G_k-image of an arrow (primitive former)
  Lower,    // T_k-image of an arrow; outside the strict fragment
};

struct MorType {
  Obj dom;
  Obj cod;
  bool operator==(const MorType& o) const { return dom == o.dom && cod == o.cod; }
  std::string show() const { return dom.show() + " -> " + cod.show(); }
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
 public:
  Tk kind() const { return kind_; }
  int level() const { return level_; }          // subscript k where applicable
  const std::vector<Obj>& objs() const { return objs_; }
  const std::vector<TermPtr>& kids() const { return kids_; }
  const MorType& type() const { return type_; }
  const Obj& dom() const { return type_.dom; }
  const Obj& cod() const { return type_.cod; }
  int n() const { return type_.dom.n(); }
  int size() const { return size_; }            // node count

  std::string show() const;                     // canonical s-expression

 private:
  Term(Tk kind, int level, std::vector<Obj> objs, std::vector<TermPtr> kids, MorType type);
  Tk kind_;
  int level_;
  std::vector<Obj> objs_;
  std::vector<TermPtr> kids_;
  MorType type_;
  int size_;

  friend TermPtr make_term(Tk, int, std::vector<Obj>, std::vector<TermPtr>, MorType);
};

bool equal_terms(const TermPtr& a, const TermPtr& b);  // structural equality

// Typed constructors.
TermPtr id(const Obj& x);
TermPtr zero(int n, int k);
TermPtr succ(int n, int k);
TermPtr eraser(const Obj& x);
TermPtr dup(const Obj& x);
TermPtr drop(int n, int k);
TermPtr comp(const TermPtr& g, const TermPtr& f);        // g after f
TermPtr tensor_mor(const TermPtr& f, const TermPtr& g);  // f acts on the left factor
TermPtr left_unit(const Obj& x);
TermPtr sym(const Obj& x, const Obj& y);
TermPtr assoc(const Obj& x, const Obj& y, const Obj& z);
TermPtr flat_rec(int k, const TermPtr& g, const TermPtr& h);
TermPtr safe_rec(int k, const TermPtr& g, const TermPtr& h);
TermPtr dep_rec(int k, const TermPtr& g, const TermPtr& h);
TermPtr param_rec(int k, const TermPtr& g, const TermPtr& h);
TermPtr raise_arrow(int k, const TermPtr& f);
TermPtr lower_arrow(int k, const TermPtr& f);

// Accessor kept for parity with the operation list; the type is attached at
// construction and every reachable Term is well typed.
inline MorType infer_type(const TermPtr& t) { return t->type(); }

// Sound identity elimination: removes Comp/Tensor with identity-denoting
// pieces (Id, unitors, associators, unit symmetries).  The result denotes the
// same function; used as a syntactic shortcut before pointwise checks.
TermPtr simplify_identities(const TermPtr& t);

// Normalized object of a flat factor list (exposed for the parser).
Obj normalize_object(int n, const std::vector<int>& factor_levels);

}  // namespace ramrec
