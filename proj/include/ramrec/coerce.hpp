#pragma once

#include <utility>
#include <vector>

#include "ramrec/monotone.hpp"
#include "ramrec/term.hpp"

namespace ramrec {

// A single level coercion at the term layer.  On objects, T_k merges level k
// downward (level 0 factors vanish) and G_k pushes level k up into k+1.
struct CoercionOp {
  CoKind kind;
  int k;
};

Obj apply_obj(CoercionOp c, const Obj& x);

// Structural action on arrows per the case tables.  Total for G (a formal
// Raise wrapper stands in when a recursion node cannot be re-formed); partial
// for T: recursion nodes that cannot be re-formed are returned unchanged when
// T fixes both endpoints, collapse to the eraser when the coerced codomain is
// the unit, and otherwise fail with a strictness error.
TermPtr apply_mor(CoercionOp c, const TermPtr& f);

// Word application, leftmost operation applied first.
Obj apply_word_obj(const std::vector<CoercionOp>& w, const Obj& x);
TermPtr apply_word_mor(const std::vector<CoercionOp>& w, const TermPtr& f);

// Per-level object action of a monoid element u: factor level j is sent to
// the greatest i with u(i) <= j, or erased (-1) when u(0) > j.  Composing
// generator actions factor-by-factor agrees with this map; that is the
// bifunctor compatibility the tests check.
std::vector<int> level_action(const MonotoneMap& u);

// Unit eta_k X : X -> T_k X (per-factor drop, eraser at level 0) and counit
// eps_k X : G_k X -> X (per-factor drop at the promoted factors).
TermPtr eta_component(int k, const Obj& x);
TermPtr eps_component(int k, const Obj& x);

// chi_k X = eta_k X . eps_k X : G_k X -> T_k X.
TermPtr chi(int k, const Obj& x);

// The constant-valued composite: T-segment T_{k-1},...,T_0 first (highest
// index applied first), then the G-segment G_k,...,G_{n-2} ascending.
// Sends N_j to the unit for j <= k-1 and to N_{n-1} otherwise.
std::vector<CoercionOp> bar_word(int k, int n);
Obj bar_obj(int k, const Obj& x);
TermPtr bar_mor(int k, const TermPtr& f);

// The two composite arrows around the safe-composition square of f at stage
// k: with W the word T_{k-1},...,T_0,
//   first  = W(T_k f) . W(eta_k dom f)
//   second = W(eta_k cod f) . W(f).
// Requires cod(f) to be a pure power of some N_m with k <= m-1, so the word
// leaves the codomain untouched.
std::pair<TermPtr, TermPtr> safe_comp_square(const TermPtr& f, int k);

}  // namespace ramrec
