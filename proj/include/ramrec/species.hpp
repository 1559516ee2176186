#pragma once

#include <string>
#include <vector>

#include "ramrec/term.hpp"

namespace ramrec {

// Species bookkeeping of a function symbol: one species digit per domain
// factor, plus the species of the codomain (the function's level).
struct SpeciesSig {
  std::vector<int> arg_counts;  // arg_counts[j] = number of domain factors at level j
  int out_level;                // highest level with a codomain factor; 0 for the unit

  // Argument species in descending order, then the output level,
  // e.g. plus -> "(1,0;0)", tetra -> "(3,2;1)".
  std::string show() const;
};

SpeciesSig species_signature(const TermPtr& t);

// True iff the term stays inside the fragment with no T-images of arrows.
// Raise (the G-image former) is permitted; Lower is the violation witness.
bool strict_check(const TermPtr& t);

// Safe composition h(r_00.., r_10.., ...): rs[i] lists the arguments supplied
// at the species-i positions of dom(h), each a morphism from a common context.
// Shape errors when the concatenated codomain factor counts disagree with the
// species-i multiplicity of dom(h).  Returns true iff every supplied argument
// has level <= the species of the position it fills.
bool validate_safe_composition(const TermPtr& h, const std::vector<std::vector<TermPtr>>& rs);

// Retype one domain factor of h at a higher species: the factor is the
// `ordinal`-th level-k factor (left to right), the result expects it at level
// t > k and precomposes the drop chain N_t -> ... -> N_k, so values agree
// with h.  The promoted factor becomes the last level-t factor of the new
// domain.
TermPtr promote_variable(const TermPtr& h, int k, int ordinal, int t);

}  // namespace ramrec
