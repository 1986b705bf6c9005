#pragma once

#include <cstdint>
#include <vector>

#include "belief/frames.hpp"
#include "belief/logic.hpp"
#include "belief/spaces.hpp"

namespace belt {

// A Harsanyi type space: states X, per-agent type spaces T_i, and belief
// maps assigning each i-type a measure over X x T_1 x ... x T_n. `prod`
// caches that product; factor 0 is X, factor i is T_i.
struct TypeSpace {
  SpacePtr states;
  std::vector<SpacePtr> types;
  ProductSpace prod;
  std::vector<std::vector<Measure>> beliefs;  // [agent][type point], over prod.space

  int agents() const { return static_cast<int>(types.size()); }
  const Measure& belief(int agent, std::size_t type_point) const {
    return beliefs[static_cast<std::size_t>(agent - 1)][type_point];
  }
};

TypeSpace make_typespace(SpacePtr states, std::vector<SpacePtr> types,
                         std::vector<std::vector<Measure>> beliefs);

struct InterpretedTypeSpace {
  TypeSpace space;
  std::vector<std::string> vocab;
  std::vector<Event> interp;  // events of `space.states`, parallel to vocab

  const Event& event_of_atom(const std::string& name) const;
};

// Checks measurability of each belief map and the condition that the
// marginal of beta_i(t_i) on T_i is the point mass at t_i.
ValidationReport validate_typespace(const TypeSpace& ts, const ThresholdSet& thresholds);
ValidationReport validate_interpreted(const InterpretedTypeSpace& its,
                                      const ThresholdSet& thresholds);

// Truth sets over X x T: atoms denote nu(p) x T, B{i,theta} holds at (x,t)
// iff beta_i(t_i) gives the operand's truth set at least theta.
Event truth_set_ts(const InterpretedTypeSpace& its, const Formula& f);

bool satisfies_ts(const InterpretedTypeSpace& its, std::size_t prod_point,
                  const Formula& f);

// Per-agent type maps f_i; the induced map on X x T is (id, f_1, .., f_n).
struct TypeMorphism {
  std::vector<std::vector<std::size_t>> maps;  // [agent][src type point] -> dst type point

  bool is_identity() const;
  bool is_bijective() const;
};

TypeMorphism identity_morphism(const TypeSpace& ts);
TypeMorphism compose(const TypeMorphism& first, const TypeMorphism& then);

// Verifies beta'_i(f_i(t_i))(E) = beta_i(t_i)(f^{-1}(E)) for every agent,
// type point, and event of dst's product space (product atoms suffice by
// additivity), plus measurability of each f_i. Requires src.states ==
// dst.states (StateSpaceMismatch otherwise).
ValidationReport check_type_morphism(const TypeSpace& src, const TypeSpace& dst,
                                     const TypeMorphism& m);

// Exhaustive search over all type-map profiles, filtered by
// check_type_morphism, in deterministic mixed-radix order. Throws
// BudgetExceeded when the profile count exceeds `budget`.
std::vector<TypeMorphism> find_type_morphisms(const TypeSpace& src,
                                              const TypeSpace& dst,
                                              std::uint64_t budget);

// Number of candidate profiles find_type_morphisms would enumerate.
std::uint64_t morphism_search_space(const TypeSpace& src, const TypeSpace& dst);

// Evaluator with a memo, as for models.
class TsEvaluator {
 public:
  explicit TsEvaluator(const InterpretedTypeSpace& its) : its_(&its) {}
  const Event& truth_set(const Formula& f);

 private:
  const InterpretedTypeSpace* its_;
  std::unordered_map<Formula, Event, FormulaHash> memo_;
};

}  // namespace belt
