#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramrec/coerce.hpp"
#include "ramrec/monotone.hpp"
#include "ramrec/report.hpp"

namespace ramrec {

// Finite chain of sets with connecting maps: a second model, independent of
// the term calculus, used to cross-check the coercion laws.
using Fin = std::vector<int>;        // sorted distinct tokens
using FinMap = std::map<int, int>;   // total function by token

struct ChainObj {
  int n = 0;
  bool presheaf = false;  // maps run sets[i+1] -> sets[i] instead
  std::vector<Fin> sets;  // n carriers
  std::vector<FinMap> maps;

  // Validates lengths and totality of every connecting map.
  static ChainObj make(int n, bool presheaf, std::vector<Fin> sets,
                       std::vector<FinMap> maps);

  bool operator==(const ChainObj& o) const {
    return n == o.n && presheaf == o.presheaf && sets == o.sets && maps == o.maps;
  }
  std::string show() const;  // e.g. "{2}->{2}->{1}" by carrier sizes
};

struct ChainMor {
  ChainObj dom, cod;
  std::vector<FinMap> comps;  // comps[i] : dom.sets[i] -> cod.sets[i]

  // Validates totality and every naturality square with the chain maps.
  static ChainMor make(ChainObj dom, ChainObj cod, std::vector<FinMap> comps);

  bool operator==(const ChainMor& o) const {
    return dom == o.dom && cod == o.cod && comps == o.comps;
  }
};

ChainObj chain_unit(int n, bool presheaf = false);
// Pointwise product; tokens of the product are pair codes ia*|B_i|+ib over
// positions in the factor carriers.
ChainObj chain_tensor(const ChainObj& a, const ChainObj& b);

ChainMor chain_id(const ChainObj& a);
ChainMor chain_compose(const ChainMor& g, const ChainMor& f);  // g after f
ChainMor chain_tensor_mor(const ChainMor& f, const ChainMor& g);
ChainMor chain_sym(const ChainObj& a, const ChainObj& b);   // a (x) b -> b (x) a
ChainMor chain_left(const ChainObj& a);                     // unit (x) a -> a

// Splice operators on ascending chains: T drops carrier k and repeats k+1
// behind the composite map, G repeats carrier k and drops k+1.
ChainObj apply_Te(int k, const ChainObj& a);
ChainObj apply_Ge(int k, const ChainObj& a);
ChainMor apply_Te(int k, const ChainMor& f);
ChainMor apply_Ge(int k, const ChainMor& f);

// Unit and counit of the splice pair: component h_k at position k resp. k+1,
// identities elsewhere.
ChainMor eta_e(int k, const ChainObj& a);
ChainMor eps_e(int k, const ChainObj& a);

// Levels of a carrier: X^k holds k+1 copies of X and is singleton-filled
// above, with identity and terminal connecting maps.
std::vector<ChainObj> levels_of(const Fin& x, int n);

// Reversal: flips carriers and maps, toggling the presheaf flag.
ChainObj reverse_chain(const ChainObj& a);
ChainMor reverse_chain(const ChainMor& f);

// Mirrored splice operators on presheaf chains, conjugated by reversal so
// the subindex runs from the other end.
ChainObj presheaf_coercion(CoKind c, int k, const ChainObj& a);
ChainMor presheaf_coercion(CoKind c, int k, const ChainMor& f);
ChainMor eta_hat(int k, const ChainObj& a);
ChainMor eps_hat(int k, const ChainObj& a);
std::vector<ChainObj> levels_of_presheaf(const Fin& x, int n);

// Counting chains over a clipped segment {0..bound}: successor saturates at
// the top token.
ChainObj nat_chain(int k, int n, int bound);
ChainMor zero_chain(int k, int n, int bound);
ChainMor succ_chain(int k, int n, int bound);

// Applies a coercion word to a chain, leftmost op first.  Presheaf chains
// get the mirrored operators.
ChainObj apply_word_chain(const std::vector<CoercionOp>& w, const ChainObj& a);
ChainMor apply_word_chain(const std::vector<CoercionOp>& w, const ChainMor& f);

// Exhaustively validates the mirrored-model laws on chains with carriers of
// size <= bound: unit fixed by every coercion, unit/counit collapse at the
// unit chain, naturality, functor laws, and transfer of every monoid
// relation discovered over words of bounded length.
LawReport comprehension_laws(int n, int bound);

}  // namespace ramrec
