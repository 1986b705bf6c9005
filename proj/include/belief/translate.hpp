#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "belief/frames.hpp"
#include "belief/typespaces.hpp"

namespace belt {

// Finite representation of the description equivalences of a model:
// `zero` groups worlds by propositional agreement, `full` is the coarsest
// stable refinement (agreement on every formula of the language), `agent`
// groups worlds by agreement on agent-i belief formulas. Class ids are
// dense, ordered by least member world.
struct DescriptionPartition {
  ThresholdSet thresholds;
  std::vector<std::size_t> zero;                // world -> class
  std::vector<std::size_t> full;                // world -> class
  std::vector<std::vector<std::size_t>> agent;  // [agent][world] -> class

  std::size_t zero_count = 0;
  std::size_t full_count = 0;
  std::vector<std::size_t> agent_count;

  std::vector<std::vector<std::size_t>> classes_of(
      const std::vector<std::size_t>& assignment) const;
};

DescriptionPartition description_partition(const Model& m,
                                           const ThresholdSet& thresholds);

// Membership of f in D(w): equivalent to satisfies(m, w, f).
bool describes(const Model& m, std::size_t world, const Formula& f);

// The factored type space of a model, with the bookkeeping that links its
// points back to the source worlds.
struct FactoredTypeSpace {
  InterpretedTypeSpace result;
  DescriptionPartition partition;
  std::vector<std::size_t> state_of_world;              // world -> state point
  std::vector<std::vector<std::size_t>> type_of_world;  // [agent][world] -> type point

  std::size_t prod_point_of_world(std::size_t world) const;
};

// Easy direction: worlds are state-type tuples, Pr_i(x,t) = beta_i(t_i).
Frame typespace_to_frame(const TypeSpace& ts);
Model interpreted_to_model(const InterpretedTypeSpace& its);

// Merged model for joint satisfiability of partial descriptions: n tagged
// copies of m plus a fresh world w* whose propositional facts come from
// targets[0] and whose agent-i beliefs are the copy-i image of
// Pr_i(targets[i]). Returns the model and the index of w*. targets must
// have length agents+1 (ArityMismatch).
std::pair<Model, std::size_t> witness_merge(const Model& m,
                                            const std::vector<std::size_t>& targets);

// Hard direction: states are 0-description classes, i-types are
// i-description classes, beliefs are pushforwards of witness measures.
// In explicit (non-dense) threshold mode, witnesses of the same type class
// may induce different pushforwards; that raises NonUniqueBeliefExtension
// rather than picking one.
FactoredTypeSpace model_to_typespace(const Model& m, const ThresholdSet& thresholds);

// Raised in explicit threshold mode when two witnesses of the same type
// class induce different pushforward beliefs; carries both candidates.
class NonUniqueBeliefError : public Error {
 public:
  NonUniqueBeliefError(int agent, std::string type_name, Measure first,
                       Measure second);

  int agent;
  std::string type_name;
  Measure first, second;
};

// The event [f] of the factored space: membership of (x,t) is decided by
// merging witnesses of the partial descriptions and evaluating f at w*.
Event event_of_formula(const FactoredTypeSpace& fts, const Model& source,
                       const Formula& f);

// Memoizing form of event_of_formula: builds each witness-merge model once
// and reuses subformula truth sets across queries.
class FormulaEventIndex {
 public:
  FormulaEventIndex(const FactoredTypeSpace& fts, const Model& source);
  const Event& event_of(const Formula& f);

 private:
  const FactoredTypeSpace* fts_;
  std::vector<std::pair<Model, std::size_t>> merged_;  // per product point
  std::vector<std::unique_ptr<Evaluator>> evals_;
  std::unordered_map<Formula, Event, FormulaHash> memo_;
};

}  // namespace belt
