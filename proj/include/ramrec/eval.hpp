#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "ramrec/term.hpp"

namespace ramrec {

using Value = boost::multiprecision::cpp_int;

// A point of an object: one natural number per factor, stored ascending by
// (level, ordinal).  Tensor splits hand the first dom-share of each level to
// the left part.
struct LevelTuple {
  Obj shape;
  std::vector<Value> entries;

  static LevelTuple of(const Obj& shape, std::vector<Value> entries);  // validates the count
  static LevelTuple unit_point(int n);

  // Build from values listed in descending level order (the order function
  // subscripts are written in); within a level, ascending ordinal.
  static LevelTuple from_args(const Obj& shape, const std::vector<Value>& args);
  std::vector<Value> to_args() const;  // inverse presentation

  // Offset of the first entry at the given level.
  int level_offset(int level) const;

  bool operator==(const LevelTuple& o) const {
    return shape == o.shape && entries == o.entries;
  }
  std::string show() const;  // e.g. "(3@N_1, 0@N_0)" in descending presentation
};

inline constexpr long long kDefaultFuel = 10'000'000;

// Interprets the term as a function on numbers.  Recursion unfoldings burn
// fuel; exhaustion raises a resource error carrying the steps consumed.
LevelTuple denote(const TermPtr& t, const LevelTuple& v, long long fuel = kDefaultFuel);

// Independent normalizer for closed points (dom = unit, cod = N_k): unfolds
// the term symbolically, substitution style, and returns the numeral index.
// Shares no evaluation code with denote; agreement between the two is the
// canonicity check.
Value normalize_point(const TermPtr& t, long long fuel = kDefaultFuel);

// The n-stage chain of constant-valued coercion images of one object, with
// the connecting arrows between consecutive stages.
struct GammaChain {
  std::vector<Obj> stages;    // stage k = bar_k X, k = 0..n-1
  std::vector<TermPtr> maps;  // maps[k] : stage k -> stage k+1
  std::string show() const;
};

GammaChain gamma_object(const Obj& x);

// Checks every naturality square of the chain image of f pointwise on inputs
// bounded by `bound`.  f must have single-factor domain and codomain.
struct LadderReport {
  bool ok = true;
  int rung = -1;          // first failing rung when !ok
  std::string detail;     // counterexample description
};

LadderReport gamma_morphism_ladder(const TermPtr& f, const Value& bound,
                                   long long fuel = kDefaultFuel);

}  // namespace ramrec
