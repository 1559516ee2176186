#pragma once

#include <string>

#include "ramrec/eval.hpp"
#include "ramrec/report.hpp"
#include "ramrec/term.hpp"

namespace ramrec {

// Extensional equality check over the standard model.  Both sides are first
// reduced by the identity simplifier; structural equality after that passes
// without any evaluation.  Otherwise all tuples with entries <= bound are
// enumerated, switching to seeded pseudo-random sampling past the cap.
struct DiagramCheck {
  TermPtr lhs, rhs;
  Value bound;
  bool pass;
  std::string counterexample;  // empty when pass
};

inline constexpr long long kTupleCap = 100000;
inline constexpr unsigned long long kSampleSeed = 0x52616D526563ull;

DiagramCheck check_equal(const TermPtr& lhs, const TermPtr& rhs, const Value& bound,
                         long long fuel = kDefaultFuel);

// Comonoid laws of (N_k, dup, eraser): counit collapses, coassociativity,
// cocommutativity, plus the eraser-at-unit triviality.
LawReport comonoid_suite(int k, int n, const Value& bound, long long fuel = kDefaultFuel);

// Projection and pairing laws over x (x) y with a small sampled library of
// component arrows.
LawReport cartesian_suite(const Obj& x, const Obj& y, const Value& bound,
                          long long fuel = kDefaultFuel);

// The eraser as a level-k recursion with trivial base and step, and the
// duplication as the pushed-up image of the zero/successor pair recursion.
TermPtr derived_eraser(int level, int n);  // level >= 1
TermPtr derived_dup(int level, int n);     // level >= 1

// Derived eraser/duplication vs the primitives, every level >= 1.
LawReport derived_structure_suite(int n, const Value& bound, long long fuel = kDefaultFuel);

// f preserves duplication and erasure.
LawReport comonoid_morphism_check(const TermPtr& f, const Value& bound,
                                  long long fuel = kDefaultFuel);

// Base triangle and step square of a recursion former against its own g, h.
LawReport recursion_diagram_suite(const TermPtr& t, const Value& bound,
                                  long long fuel = kDefaultFuel);

}  // namespace ramrec
