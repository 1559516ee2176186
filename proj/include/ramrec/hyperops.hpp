#pragma once

#include <map>
#include <string>

#include "ramrec/term.hpp"

namespace ramrec {

// Numeral s_k^m . 0_k : unit -> N_k.
TermPtr numeral(int n, int k, long long m);

// Constant map X -> N_k with value m.
TermPtr const_mor(const Obj& x, int k, long long m);

// Projections X(x)Y -> X and X(x)Y -> Y (erase the other block).
TermPtr proj1(const Obj& x, const Obj& y);
TermPtr proj2(const Obj& x, const Obj& y);

// pair(f,g) = (f(x)g) . dup : X -> cod(f)(x)cod(g); f and g must share X.
TermPtr pair_mor(const TermPtr& f, const TermPtr& g);

// The hyperoperation ladder.
//   plus  : N_1(x)N_0 -> N_0   plus(x,n) = x+n
//   times : N_1(x)N_1 -> N_0   times(x,y) = x*y
//   exp   : N_2(x)N_1 -> N_1   exp(x,y) = y^x
//   tetra : N_3(x)N_2 -> N_1   tetra(0,y) = y, tetra(x+1,y) = exp(y, tetra(x,y))
// tetra needs four levels and is present only when n >= 4.
TermPtr plus_term(int n);
TermPtr times_term(int n);
TermPtr exp_term(int n);
TermPtr tetra_term(int n);

std::map<std::string, TermPtr> stdlib_terms(int n);

// Rewrites a ParamRec node as the DepRec that ignores its counter component:
// SDR(k, g, h . (proj2 (x) id)).  Same domain, codomain, and values.
TermPtr elaborate_psrr(const TermPtr& t);

}  // namespace ramrec
