#include "belief/translate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "belief/errors.hpp"

namespace belt {

namespace {

// Renumbers an arbitrary keying of worlds into dense class ids ordered by
// least member world.
template <typename Key>
std::pair<std::vector<std::size_t>, std::size_t> densify(
    const std::vector<Key>& keys) {
  std::map<Key, std::size_t> first_seen;
  for (std::size_t w = 0; w < keys.size(); ++w)
    first_seen.try_emplace(keys[w], w);
  std::vector<std::pair<std::size_t, const Key*>> order;
  for (const auto& [key, w] : first_seen) order.emplace_back(w, &key);
  std::sort(order.begin(), order.end());
  std::map<Key, std::size_t> id;
  for (std::size_t c = 0; c < order.size(); ++c) id[*order[c].second] = c;
  std::vector<std::size_t> out(keys.size());
  for (std::size_t w = 0; w < keys.size(); ++w) out[w] = id[keys[w]];
  return {std::move(out), order.size()};
}

std::vector<Event> class_events(const Model& m,
                                const std::vector<std::size_t>& assignment,
                                std::size_t count) {
  std::vector<std::vector<bool>> masks(count,
                                       std::vector<bool>(assignment.size(), false));
  for (std::size_t w = 0; w < assignment.size(); ++w) masks[assignment[w]][w] = true;
  std::vector<Event> out;
  out.reserve(count);
  for (auto& mask : masks) out.push_back(event_from_mask(m.frame.worlds, mask));
  return out;
}

// Agreement signature of a world for one agent against the current block
// structure. Dense mode compares exact block probabilities; an explicit
// finite threshold set compares {U : Pr(U) >= theta} over unions of blocks,
// with the theta = 1 case specialized to support comparison.
std::string agent_signature(const Model& m, int agent, std::size_t world,
                            const std::vector<Event>& blocks,
                            const ThresholdSet& thresholds) {
  const Measure& mu = m.frame.belief(agent, world);
  std::string sig;
  if (thresholds.dense) {
    for (const Event& b : blocks) {
      sig += rat_to_fraction_string(mu.of(b));
      sig += ';';
    }
    return sig;
  }
  for (const Rat& theta : thresholds.values) {
    if (theta == 0) continue;  // Pr(U) >= 0 always
    if (theta == 1) {
      // Pr(U) >= 1 iff the support is contained in U: record which blocks
      // the support touches.
      for (const Event& b : blocks) sig += mu.of(b) > 0 ? '1' : '0';
      sig += ';';
      continue;
    }
    if (blocks.size() > 20)
      throw Error(ErrKind::BudgetExceeded,
                  "explicit-mode refinement over 2^" +
                      std::to_string(blocks.size()) + " block unions");
    std::vector<Rat> vals(blocks.size());
    for (std::size_t c = 0; c < blocks.size(); ++c) vals[c] = mu.of(blocks[c]);
    for (std::size_t mask = 1; mask < (std::size_t{1} << blocks.size()); ++mask) {
      Rat total = 0;
      for (std::size_t c = 0; c < blocks.size(); ++c)
        if (mask & (std::size_t{1} << c)) total += vals[c];
      sig += total >= theta ? '1' : '0';
    }
    sig += ';';
  }
  return sig;
}

}  // namespace

std::vector<std::vector<std::size_t>> DescriptionPartition::classes_of(
    const std::vector<std::size_t>& assignment) const {
  std::size_t count = assignment.empty()
                          ? 0
                          : 1 + *std::max_element(assignment.begin(), assignment.end());
  std::vector<std::vector<std::size_t>> out(count);
  for (std::size_t w = 0; w < assignment.size(); ++w) out[assignment[w]].push_back(w);
  return out;
}

DescriptionPartition description_partition(const Model& m,
                                           const ThresholdSet& thresholds) {
  const std::size_t n_worlds = m.frame.worlds->size();
  DescriptionPartition part;
  part.thresholds = thresholds;

  // 0-descriptions: agreement on every primitive proposition.
  std::vector<std::vector<bool>> valuation(n_worlds,
                                           std::vector<bool>(m.vocab.size(), false));
  for (std::size_t p = 0; p < m.vocab.size(); ++p)
    for (std::size_t w = 0; w < n_worlds; ++w)
      valuation[w][p] = m.interp[p].contains_point(w);
  std::tie(part.zero, part.zero_count) = densify(valuation);

  // Full descriptions: coarsest stable refinement of the 0-partition under
  // belief agreement relative to the current blocks.
  std::vector<std::size_t> full = part.zero;
  std::size_t count = part.zero_count;
  while (true) {
    std::vector<Event> blocks = class_events(m, full, count);
    std::vector<std::string> keys(n_worlds);
    for (std::size_t w = 0; w < n_worlds; ++w) {
      keys[w] = std::to_string(full[w]);
      for (int i = 1; i <= m.frame.agents; ++i) {
        keys[w] += '|';
        keys[w] += agent_signature(m, i, w, blocks, thresholds);
      }
    }
    auto [next, next_count] = densify(keys);
    if (next_count == count) break;
    full = std::move(next);
    count = next_count;
  }
  part.full = std::move(full);
  part.full_count = count;

  // i-descriptions: agreement on agent i's beliefs about the stable blocks.
  std::vector<Event> blocks = class_events(m, part.full, part.full_count);
  part.agent.resize(static_cast<std::size_t>(m.frame.agents));
  part.agent_count.resize(static_cast<std::size_t>(m.frame.agents));
  for (int i = 1; i <= m.frame.agents; ++i) {
    std::vector<std::string> keys(n_worlds);
    for (std::size_t w = 0; w < n_worlds; ++w)
      keys[w] = agent_signature(m, i, w, blocks, thresholds);
    std::tie(part.agent[static_cast<std::size_t>(i - 1)],
             part.agent_count[static_cast<std::size_t>(i - 1)]) = densify(keys);
  }
  return part;
}

bool describes(const Model& m, std::size_t world, const Formula& f) {
  return satisfies(m, world, f);
}

Frame typespace_to_frame(const TypeSpace& ts) {
  Frame frame;
  frame.worlds = ts.prod.space;
  frame.agents = ts.agents();
  frame.pr.resize(ts.types.size());
  for (std::size_t i = 0; i < ts.types.size(); ++i) {
    frame.pr[i].reserve(frame.worlds->size());
    for (std::size_t w = 0; w < frame.worlds->size(); ++w)
      frame.pr[i].push_back(ts.beliefs[i][ts.prod.component(w, i + 1)]);
  }
  return frame;
}

Model interpreted_to_model(const InterpretedTypeSpace& its) {
  Model m;
  m.frame = typespace_to_frame(its.space);
  m.vocab = its.vocab;
  m.interp.reserve(its.interp.size());
  for (const Event& e : its.interp) m.interp.push_back(its.space.prod.cylinder(0, e));
  return m;
}

std::pair<Model, std::size_t> witness_merge(const Model& m,
                                            const std::vector<std::size_t>& targets) {
  const int n = m.frame.agents;
  if (targets.size() != static_cast<std::size_t>(n) + 1)
    throw Error(ErrKind::ArityMismatch,
                "expected " + std::to_string(n + 1) + " target worlds");
  const Space& omega = *m.frame.worlds;
  for (std::size_t t : targets)
    if (t >= omega.size())
      throw Error(ErrKind::PointNotInCarrier, "target world out of range");

  const std::size_t copy_size = omega.size();
  const std::size_t star = static_cast<std::size_t>(n) * copy_size;
  std::vector<std::string> points;
  points.reserve(star + 1);
  for (int j = 1; j <= n; ++j)
    for (const auto& name : omega.points)
      points.push_back(name + "#" + std::to_string(j));
  points.push_back("*");

  std::vector<std::vector<std::size_t>> atoms;
  for (int j = 0; j < n; ++j)
    for (const auto& block : omega.atoms) {
      std::vector<std::size_t> tagged;
      tagged.reserve(block.size());
      for (std::size_t p : block)
        tagged.push_back(static_cast<std::size_t>(j) * copy_size + p);
      atoms.push_back(std::move(tagged));
    }
  atoms.push_back({star});
  SpacePtr worlds = make_space(std::move(points), std::move(atoms));

  // Copy-j image of a measure on the original worlds.
  auto lift = [&](const Measure& mu, int j) {
    std::vector<Rat> w(worlds->atom_count(), Rat(0));
    for (std::size_t a = 0; a < omega.atom_count(); ++a)
      w[static_cast<std::size_t>(j - 1) * omega.atom_count() + a] = mu.weights[a];
    return Measure{worlds, std::move(w)};
  };

  Model out;
  out.frame.worlds = worlds;
  out.frame.agents = n;
  out.frame.pr.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& pr = out.frame.pr[static_cast<std::size_t>(i - 1)];
    pr.reserve(worlds->size());
    for (int j = 1; j <= n; ++j)
      for (std::size_t w = 0; w < copy_size; ++w)
        pr.push_back(lift(m.frame.belief(i, w), j));
    pr.push_back(lift(m.frame.belief(i, targets[static_cast<std::size_t>(i)]), i));
  }

  out.vocab = m.vocab;
  for (std::size_t p = 0; p < m.vocab.size(); ++p) {
    std::vector<bool> mask(worlds->size(), false);
    for (int j = 0; j < n; ++j)
      for (std::size_t w = 0; w < copy_size; ++w)
        mask[static_cast<std::size_t>(j) * copy_size + w] =
            m.interp[p].contains_point(w);
    mask[star] = m.interp[p].contains_point(targets[0]);
    out.interp.push_back(event_from_mask(worlds, mask));
  }
  return {std::move(out), star};
}

NonUniqueBeliefError::NonUniqueBeliefError(int agent_, std::string type_name_,
                                           Measure first_, Measure second_)
    : Error(ErrKind::NonUniqueBeliefExtension,
            "agent " + std::to_string(agent_) + ", type class " + type_name_ +
                ": witnesses induce different beliefs"),
      agent(agent_),
      type_name(std::move(type_name_)),
      first(std::move(first_)),
      second(std::move(second_)) {}

namespace {

std::string class_name(const Space& omega, const std::vector<std::size_t>& members) {
  std::vector<std::string> names;
  names.reserve(members.size());
  for (std::size_t w : members) names.push_back(omega.points[w]);
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k) out += '+';
    out += names[k];
  }
  return out;
}

}  // namespace

FactoredTypeSpace model_to_typespace(const Model& m, const ThresholdSet& thresholds) {
  const Space& omega = *m.frame.worlds;
  FactoredTypeSpace fts;
  fts.partition = description_partition(m, thresholds);
  const DescriptionPartition& part = fts.partition;

  // States: 0-description classes, with the algebra generated by the
  // events E_0(p). Distinct classes differ on some proposition, so the
  // generated atoms are singletons whenever the vocabulary is nonempty.
  auto zero_classes = part.classes_of(part.zero);
  std::vector<std::string> state_names;
  for (const auto& members : zero_classes)
    state_names.push_back(class_name(omega, members));
  std::vector<std::vector<std::size_t>> generators;
  for (std::size_t p = 0; p < m.vocab.size(); ++p) {
    std::vector<std::size_t> gen;
    for (std::size_t c = 0; c < zero_classes.size(); ++c)
      if (m.interp[p].contains_point(zero_classes[c].front())) gen.push_back(c);
    generators.push_back(std::move(gen));
  }
  SpacePtr states = generated_algebra(state_names, generators);

  // i-types: i-description classes. Distinct classes are separated by some
  // belief formula, so the quotient algebra is discrete.
  std::vector<SpacePtr> types;
  std::vector<std::vector<std::vector<std::size_t>>> type_members;
  for (int i = 1; i <= m.frame.agents; ++i) {
    auto classes = part.classes_of(part.agent[static_cast<std::size_t>(i - 1)]);
    std::vector<std::string> names;
    for (const auto& members : classes) names.push_back(class_name(omega, members));
    types.push_back(make_discrete_space(std::move(names)));
    type_members.push_back(std::move(classes));
  }

  std::vector<SpacePtr> factors{states};
  for (const auto& t : types) factors.push_back(t);
  ProductSpace prod = product(factors);

  // Every world maps to its class tuple; beliefs are pushforwards of
  // witness measures along that map.
  std::vector<std::size_t> world_to_prod(omega.size());
  for (std::size_t w = 0; w < omega.size(); ++w) {
    std::vector<std::size_t> tuple;
    tuple.push_back(part.zero[w]);
    for (int i = 1; i <= m.frame.agents; ++i)
      tuple.push_back(part.agent[static_cast<std::size_t>(i - 1)][w]);
    world_to_prod[w] = prod.point_index(tuple);
  }

  std::vector<std::vector<Measure>> beliefs;
  for (int i = 1; i <= m.frame.agents; ++i) {
    std::vector<Measure> per_type;
    const auto& members = type_members[static_cast<std::size_t>(i - 1)];
    for (std::size_t t = 0; t < members.size(); ++t) {
      Measure first =
          pushforward(m.frame.belief(i, members[t].front()), world_to_prod, prod.space);
      for (std::size_t k = 1; k < members[t].size(); ++k) {
        Measure other =
            pushforward(m.frame.belief(i, members[t][k]), world_to_prod, prod.space);
        if (!other.same_weights(first))
          throw NonUniqueBeliefError(
              i, types[static_cast<std::size_t>(i - 1)]->points[t], first, other);
      }
      per_type.push_back(std::move(first));
    }
    beliefs.push_back(std::move(per_type));
  }

  fts.result.space = make_typespace(states, types, std::move(beliefs));
  fts.result.vocab = m.vocab;
  for (std::size_t p = 0; p < m.vocab.size(); ++p) {
    std::vector<bool> mask(states->size(), false);
    for (std::size_t c = 0; c < zero_classes.size(); ++c)
      mask[c] = m.interp[p].contains_point(zero_classes[c].front());
    fts.result.interp.push_back(event_from_mask(states, mask));
  }

  fts.state_of_world = part.zero;
  fts.type_of_world = part.agent;
  return fts;
}

std::size_t FactoredTypeSpace::prod_point_of_world(std::size_t world) const {
  std::vector<std::size_t> tuple;
  tuple.push_back(state_of_world[world]);
  for (const auto& per_agent : type_of_world) tuple.push_back(per_agent[world]);
  return result.space.prod.point_index(tuple);
}

FormulaEventIndex::FormulaEventIndex(const FactoredTypeSpace& fts, const Model& source)
    : fts_(&fts) {
  const ProductSpace& prod = fts.result.space.prod;
  const DescriptionPartition& part = fts.partition;
  auto zero_classes = part.classes_of(part.zero);
  std::vector<std::vector<std::vector<std::size_t>>> agent_classes;
  for (const auto& assignment : part.agent)
    agent_classes.push_back(part.classes_of(assignment));

  merged_.reserve(prod.space->size());
  evals_.reserve(prod.space->size());
  for (std::size_t p = 0; p < prod.space->size(); ++p) {
    std::vector<std::size_t> tuple = prod.tuple_of(p);
    std::vector<std::size_t> targets;
    targets.push_back(zero_classes[tuple[0]].front());
    for (std::size_t i = 0; i < agent_classes.size(); ++i)
      targets.push_back(agent_classes[i][tuple[i + 1]].front());
    merged_.push_back(witness_merge(source, targets));
    evals_.push_back(std::make_unique<Evaluator>(merged_.back().first));
  }
}

const Event& FormulaEventIndex::event_of(const Formula& f) {
  auto it = memo_.find(f);
  if (it != memo_.end()) return it->second;
  const ProductSpace& prod = fts_->result.space.prod;
  std::vector<bool> mask(prod.space->size(), false);
  for (std::size_t p = 0; p < prod.space->size(); ++p)
    mask[p] = evals_[p]->truth_set(f).contains_point(merged_[p].second);
  Event e = event_from_mask(prod.space, mask);
  return memo_.emplace(f, std::move(e)).first->second;
}

Event event_of_formula(const FactoredTypeSpace& fts, const Model& source,
                       const Formula& f) {
  FormulaEventIndex index(fts, source);
  return index.event_of(f);
}

}  // namespace belt
