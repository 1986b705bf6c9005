#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "belief/logic.hpp"
#include "belief/spaces.hpp"

namespace belt {

// One validation finding: a condition id plus a concrete witness with
// exact values.
struct Violation {
  std::string condition;
  std::map<std::string, std::string> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Worlds plus one belief map per agent. pr[i][w] is agent i+1's measure at
// world w (agents are 1-based in formulas, 0-based in storage).
struct Frame {
  SpacePtr worlds;
  int agents = 0;
  std::vector<std::vector<Measure>> pr;  // [agent][world]

  const Measure& belief(int agent, std::size_t world) const {
    return pr[static_cast<std::size_t>(agent - 1)][world];
  }
};

// A frame plus an interpretation of primitive propositions as events.
struct Model {
  Frame frame;
  std::vector<std::string> vocab;
  std::vector<Event> interp;  // parallel to vocab

  const Event& event_of_atom(const std::string& name) const;
};

// Checks that each Pr_i is measurable (threshold preimages over all events
// and all relevant thresholds land in the sigma-algebra) and introspective
// (Pr_i(w) gives outer measure 1 to the set of worlds sharing its
// beliefs). Violations carry witnesses; nothing throws.
ValidationReport validate_frame(const Frame& frame, const ThresholdSet& thresholds);

// Also checks every interpreted atom against the vocabulary and the world
// space, then defers to validate_frame.
ValidationReport validate_model(const Model& model, const ThresholdSet& thresholds);

// Recursive truth-set computation; the result is always measurable.
Event truth_set(const Model& model, const Formula& f);

bool satisfies(const Model& model, std::size_t world, const Formula& f);
bool is_valid_in(const Model& model, const Formula& f);
bool is_satisfiable_in(const Model& model, const Formula& f);

// Memoizing evaluator for workloads that evaluate many formulas sharing
// subformulas against one model. Not thread-safe; confine per session.
class Evaluator {
 public:
  explicit Evaluator(const Model& model) : model_(&model) {}
  const Event& truth_set(const Formula& f);

 private:
  const Model* model_;
  std::unordered_map<Formula, Event, FormulaHash> memo_;
};

}  // namespace belt
