#include "belief/frames.hpp"

#include <algorithm>
#include <sstream>

#include "belief/errors.hpp"

namespace belt {

namespace {

std::string points_to_text(const Event& e) {
  std::string out = "{";
  bool first = true;
  for (const auto& name : e.point_names()) {
    if (!first) out += ",";
    out += name;
    first = false;
  }
  return out + "}";
}

std::string mask_to_text(const Space& space, const std::vector<bool>& mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p = 0; p < mask.size(); ++p)
    if (mask[p]) {
      if (!first) out += ",";
      out += space.points[p];
      first = false;
    }
  return out + "}";
}

// Measurability of Pr_i over every event and every relevant threshold is
// equivalent to: on each atom of the world algebra, the map w -> Pr_i(w)(E)
// never crosses a usable threshold. In dense (or achieved-value) mode that
// means Pr_i is constant on atoms; with an explicit finite threshold set a
// within-atom difference only matters if some union of atoms and some
// theta in the set separate the two worlds.
void check_measurability(const Frame& frame, const ThresholdSet& thresholds,
                         int agent, ValidationReport& report) {
  const Space& worlds = *frame.worlds;
  const auto& pr = frame.pr[static_cast<std::size_t>(agent - 1)];
  for (const auto& block : worlds.atoms) {
    std::size_t rep = block.front();
    for (std::size_t w : block) {
      if (w == rep || pr[w].same_weights(pr[rep])) continue;
      if (thresholds.dense) {
        // Any differing atom weight yields a distinguishing achieved value.
        std::size_t a = 0;
        while (pr[w].weights[a] == pr[rep].weights[a]) ++a;
        Event e = Event::none(frame.worlds);
        e.blocks[a] = true;
        report.violations.push_back(
            {"measurability",
             {{"agent", std::to_string(agent)},
              {"event", points_to_text(e)},
              {"theta", rat_to_string(std::max(pr[w].weights[a], pr[rep].weights[a]))},
              {"worlds", worlds.points[rep] + "," + worlds.points[w]}}});
        break;
      }
      // Explicit mode: search unions of atoms for a separating (E, theta).
      const std::size_t atom_count = worlds.atom_count();
      if (atom_count > 20)
        throw Error(ErrKind::BudgetExceeded,
                    "explicit-mode measurability check over 2^" +
                        std::to_string(atom_count) + " events");
      bool separated = false;
      for (std::size_t mask = 1; mask < (std::size_t{1} << atom_count) && !separated;
           ++mask) {
        Event e = Event::none(frame.worlds);
        for (std::size_t a = 0; a < atom_count; ++a)
          if (mask & (std::size_t{1} << a)) e.blocks[a] = true;
        Rat vw = pr[w].of(e), vr = pr[rep].of(e);
        for (const Rat& theta : thresholds.values) {
          if ((vw >= theta) != (vr >= theta)) {
            report.violations.push_back(
                {"measurability",
                 {{"agent", std::to_string(agent)},
                  {"event", points_to_text(e)},
                  {"theta", rat_to_string(theta)},
                  {"worlds", worlds.points[rep] + "," + worlds.points[w]}}});
            separated = true;
            break;
          }
        }
      }
      if (separated) break;
    }
  }
}

void check_introspection(const Frame& frame, int agent, ValidationReport& report) {
  const Space& worlds = *frame.worlds;
  const auto& pr = frame.pr[static_cast<std::size_t>(agent - 1)];
  for (std::size_t w = 0; w < worlds.size(); ++w) {
    std::vector<bool> same(worlds.size(), false);
    for (std::size_t v = 0; v < worlds.size(); ++v)
      same[v] = pr[v].same_weights(pr[w]);
    Rat outer = pr[w].outer(same);
    if (outer != 1)
      report.violations.push_back(
          {"introspection",
           {{"agent", std::to_string(agent)},
            {"world", worlds.points[w]},
            {"belief_class", mask_to_text(worlds, same)},
            {"outer_measure", rat_to_fraction_string(outer)}}});
  }
}

}  // namespace

const Event& Model::event_of_atom(const std::string& name) const {
  for (std::size_t i = 0; i < vocab.size(); ++i)
    if (vocab[i] == name) return interp[i];
  throw Error(ErrKind::VocabMismatch, "atom '" + name + "' not in vocabulary");
}

ValidationReport validate_frame(const Frame& frame, const ThresholdSet& thresholds) {
  ValidationReport report;
  if (frame.agents < 1)
    throw Error(ErrKind::Schema, "frame must declare at least one agent");
  if (frame.pr.size() != static_cast<std::size_t>(frame.agents))
    throw Error(ErrKind::Schema, "belief map count does not match agent count");
  for (const auto& per_agent : frame.pr) {
    if (per_agent.size() != frame.worlds->size())
      throw Error(ErrKind::Schema, "belief map is not total on worlds");
    for (const auto& mu : per_agent)
      if (!(*mu.space == *frame.worlds))
        throw Error(ErrKind::SpaceMismatch, "belief measure on a foreign space");
  }
  for (int i = 1; i <= frame.agents; ++i) {
    check_measurability(frame, thresholds, i, report);
    check_introspection(frame, i, report);
  }
  return report;
}

ValidationReport validate_model(const Model& model, const ThresholdSet& thresholds) {
  if (model.vocab.size() != model.interp.size())
    throw Error(ErrKind::Schema, "vocabulary and interpretation differ in size");
  for (const Event& e : model.interp)
    if (!(*e.space == *model.frame.worlds))
      throw Error(ErrKind::SpaceMismatch, "interpreted atom on a foreign space");
  return validate_frame(model.frame, thresholds);
}

Event truth_set(const Model& model, const Formula& f) {
  switch (f.kind()) {
    case Conn::Atom:
      return model.event_of_atom(f.atom_name());
    case Conn::Not:
      return truth_set(model, f.child()).complement();
    case Conn::And:
      return truth_set(model, f.lhs()).intersect(truth_set(model, f.rhs()));
    case Conn::Believes: {
      if (f.agent() < 1 || f.agent() > model.frame.agents)
        throw Error(ErrKind::AgentOutOfRange, "agent " + std::to_string(f.agent()));
      Event operand = truth_set(model, f.child());
      const auto& pr = model.frame.pr[static_cast<std::size_t>(f.agent() - 1)];
      std::vector<bool> mask = threshold_preimage(pr, operand, f.theta());
      return event_from_mask(model.frame.worlds, mask);
    }
  }
  throw Error(ErrKind::Schema, "malformed formula");
}

bool satisfies(const Model& model, std::size_t world, const Formula& f) {
  return truth_set(model, f).contains_point(world);
}

bool is_valid_in(const Model& model, const Formula& f) {
  return truth_set(model, f).full();
}

bool is_satisfiable_in(const Model& model, const Formula& f) {
  return !truth_set(model, f).empty();
}

const Event& Evaluator::truth_set(const Formula& f) {
  auto it = memo_.find(f);
  if (it != memo_.end()) return it->second;
  Event result = [&] {
    switch (f.kind()) {
      case Conn::Atom:
        return model_->event_of_atom(f.atom_name());
      case Conn::Not:
        return truth_set(f.child()).complement();
      case Conn::And: {
        Event a = truth_set(f.lhs());
        return a.intersect(truth_set(f.rhs()));
      }
      case Conn::Believes: {
        Event operand = truth_set(f.child());
        const auto& pr = model_->frame.pr[static_cast<std::size_t>(f.agent() - 1)];
        return event_from_mask(model_->frame.worlds,
                               threshold_preimage(pr, operand, f.theta()));
      }
    }
    throw Error(ErrKind::Schema, "malformed formula");
  }();
  return memo_.emplace(f, std::move(result)).first->second;
}

}  // namespace belt
