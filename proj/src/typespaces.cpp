#include "belief/typespaces.hpp"

#include <algorithm>

#include "belief/errors.hpp"

namespace belt {

namespace {

std::string atom_event_text(const ProductSpace& prod, std::size_t atom) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p : prod.space->atoms[atom]) {
    if (!first) out += ",";
    out += prod.space->points[p];
    first = false;
  }
  return out + "}";
}

}  // namespace

TypeSpace make_typespace(SpacePtr states, std::vector<SpacePtr> types,
                         std::vector<std::vector<Measure>> beliefs) {
  if (types.empty()) throw Error(ErrKind::Schema, "type space needs at least one agent");
  if (beliefs.size() != types.size())
    throw Error(ErrKind::Schema, "belief map count does not match agent count");
  TypeSpace ts;
  std::vector<SpacePtr> factors;
  factors.push_back(states);
  for (const auto& t : types) factors.push_back(t);
  ts.prod = product(std::move(factors));
  ts.states = std::move(states);
  ts.types = std::move(types);
  for (std::size_t i = 0; i < beliefs.size(); ++i) {
    if (beliefs[i].size() != ts.types[i]->size())
      throw Error(ErrKind::Schema, "belief map is not total on types");
    for (const auto& mu : beliefs[i])
      if (!(*mu.space == *ts.prod.space))
        throw Error(ErrKind::SpaceMismatch, "belief measure not on the product space");
  }
  ts.beliefs = std::move(beliefs);
  return ts;
}

const Event& InterpretedTypeSpace::event_of_atom(const std::string& name) const {
  for (std::size_t i = 0; i < vocab.size(); ++i)
    if (vocab[i] == name) return interp[i];
  throw Error(ErrKind::VocabMismatch, "atom '" + name + "' not in vocabulary");
}

ValidationReport validate_typespace(const TypeSpace& ts, const ThresholdSet& thresholds) {
  ValidationReport report;
  for (int i = 1; i <= ts.agents(); ++i) {
    const Space& ti = *ts.types[static_cast<std::size_t>(i - 1)];
    const auto& beta = ts.beliefs[static_cast<std::size_t>(i - 1)];
    // Measurability of beta_i, by the same atom-constancy reduction used
    // for frames.
    for (const auto& block : ti.atoms) {
      std::size_t rep = block.front();
      for (std::size_t t : block) {
        if (t == rep || beta[t].same_weights(beta[rep])) continue;
        if (thresholds.dense) {
          std::size_t a = 0;
          while (beta[t].weights[a] == beta[rep].weights[a]) ++a;
          report.violations.push_back(
              {"beta_measurability",
               {{"agent", std::to_string(i)},
                {"event", atom_event_text(ts.prod, a)},
                {"theta",
                 rat_to_string(std::max(beta[t].weights[a], beta[rep].weights[a]))},
                {"types", ti.points[rep] + "," + ti.points[t]}}});
          break;
        }
        const std::size_t atom_count = ts.prod.space->atom_count();
        if (atom_count > 20)
          throw Error(ErrKind::BudgetExceeded,
                      "explicit-mode measurability check over 2^" +
                          std::to_string(atom_count) + " events");
        bool separated = false;
        for (std::size_t mask = 1;
             mask < (std::size_t{1} << atom_count) && !separated; ++mask) {
          Event e = Event::none(ts.prod.space);
          for (std::size_t a = 0; a < atom_count; ++a)
            if (mask & (std::size_t{1} << a)) e.blocks[a] = true;
          Rat vt = beta[t].of(e), vr = beta[rep].of(e);
          for (const Rat& theta : thresholds.values) {
            if ((vt >= theta) != (vr >= theta)) {
              report.violations.push_back(
                  {"beta_measurability",
                   {{"agent", std::to_string(i)},
                    {"event", "(omitted union)"},
                    {"theta", rat_to_string(theta)},
                    {"types", ti.points[rep] + "," + ti.points[t]}}});
              separated = true;
              break;
            }
          }
        }
        if (separated) break;
      }
    }
    // Marginal of beta_i(t_i) on T_i must be the point mass at t_i.
    for (std::size_t t = 0; t < ti.size(); ++t) {
      Measure marg = marginal(ts.prod, beta[t], static_cast<std::size_t>(i));
      Measure delta = Measure::point_mass(ts.types[static_cast<std::size_t>(i - 1)], t);
      if (!marg.same_weights(delta)) {
        std::size_t a = 0;
        while (marg.weights[a] == delta.weights[a]) ++a;
        report.violations.push_back(
            {"marginal",
             {{"agent", std::to_string(i)},
              {"type", ti.points[t]},
              {"type_atom", ti.points[ti.atoms[a].front()]},
              {"marginal_weight", rat_to_fraction_string(marg.weights[a])},
              {"expected", rat_to_fraction_string(delta.weights[a])}}});
      }
    }
  }
  return report;
}

ValidationReport validate_interpreted(const InterpretedTypeSpace& its,
                                      const ThresholdSet& thresholds) {
  if (its.vocab.size() != its.interp.size())
    throw Error(ErrKind::Schema, "vocabulary and interpretation differ in size");
  for (const Event& e : its.interp)
    if (!(*e.space == *its.space.states))
      throw Error(ErrKind::SpaceMismatch, "interpreted atom not on the state space");
  return validate_typespace(its.space, thresholds);
}

Event truth_set_ts(const InterpretedTypeSpace& its, const Formula& f) {
  const TypeSpace& ts = its.space;
  switch (f.kind()) {
    case Conn::Atom:
      return ts.prod.cylinder(0, its.event_of_atom(f.atom_name()));
    case Conn::Not:
      return truth_set_ts(its, f.child()).complement();
    case Conn::And:
      return truth_set_ts(its, f.lhs()).intersect(truth_set_ts(its, f.rhs()));
    case Conn::Believes: {
      if (f.agent() < 1 || f.agent() > ts.agents())
        throw Error(ErrKind::AgentOutOfRange, "agent " + std::to_string(f.agent()));
      Event operand = truth_set_ts(its, f.child());
      const auto& beta = ts.beliefs[static_cast<std::size_t>(f.agent() - 1)];
      std::vector<bool> mask = threshold_preimage(beta, operand, f.theta());
      Event ti_event =
          event_from_mask(ts.types[static_cast<std::size_t>(f.agent() - 1)], mask);
      return ts.prod.cylinder(static_cast<std::size_t>(f.agent()), ti_event);
    }
  }
  throw Error(ErrKind::Schema, "malformed formula");
}

bool satisfies_ts(const InterpretedTypeSpace& its, std::size_t prod_point,
                  const Formula& f) {
  return truth_set_ts(its, f).contains_point(prod_point);
}

bool TypeMorphism::is_identity() const {
  for (const auto& m : maps)
    for (std::size_t t = 0; t < m.size(); ++t)
      if (m[t] != t) return false;
  return true;
}

bool TypeMorphism::is_bijective() const {
  for (const auto& m : maps) {
    std::vector<bool> hit(m.size(), false);
    for (std::size_t u : m) {
      if (u >= m.size() || hit[u]) return false;
      hit[u] = true;
    }
  }
  return true;
}

TypeMorphism identity_morphism(const TypeSpace& ts) {
  TypeMorphism m;
  for (const auto& t : ts.types) {
    std::vector<std::size_t> id(t->size());
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;
    m.maps.push_back(std::move(id));
  }
  return m;
}

TypeMorphism compose(const TypeMorphism& first, const TypeMorphism& then) {
  if (first.maps.size() != then.maps.size())
    throw Error(ErrKind::ArityMismatch, "morphism agent counts differ");
  TypeMorphism out;
  for (std::size_t i = 0; i < first.maps.size(); ++i) {
    std::vector<std::size_t> m(first.maps[i].size());
    for (std::size_t t = 0; t < m.size(); ++t) m[t] = then.maps[i][first.maps[i][t]];
    out.maps.push_back(std::move(m));
  }
  return out;
}

namespace {

// Induced point map (id_X, f_1, .., f_n) between the product carriers.
std::vector<std::size_t> induced_point_map(const TypeSpace& src, const TypeSpace& dst,
                                           const TypeMorphism& m) {
  std::vector<std::size_t> out(src.prod.space->size());
  for (std::size_t p = 0; p < out.size(); ++p) {
    std::vector<std::size_t> tuple = src.prod.tuple_of(p);
    for (std::size_t i = 0; i < m.maps.size(); ++i)
      tuple[i + 1] = m.maps[i][tuple[i + 1]];
    out[p] = dst.prod.point_index(tuple);
  }
  return out;
}

}  // namespace

ValidationReport check_type_morphism(const TypeSpace& src, const TypeSpace& dst,
                                     const TypeMorphism& m) {
  if (!(*src.states == *dst.states))
    throw Error(ErrKind::StateSpaceMismatch, "morphism requires a common state space");
  if (src.agents() != dst.agents() ||
      m.maps.size() != static_cast<std::size_t>(src.agents()))
    throw Error(ErrKind::ArityMismatch, "agent counts differ");
  ValidationReport report;
  for (std::size_t i = 0; i < m.maps.size(); ++i) {
    const Space& ti = *src.types[i];
    const Space& ti_dst = *dst.types[i];
    if (m.maps[i].size() != ti.size())
      throw Error(ErrKind::ArityMismatch, "type map is not total");
    for (std::size_t u : m.maps[i])
      if (u >= ti_dst.size())
        throw Error(ErrKind::PointNotInCarrier, "type map target out of range");
    // f_i must be measurable between the type algebras.
    for (const auto& block : ti.atoms) {
      std::size_t first = ti_dst.atom_of[m.maps[i][block.front()]];
      for (std::size_t t : block)
        if (ti_dst.atom_of[m.maps[i][t]] != first) {
          report.violations.push_back(
              {"morphism_measurability",
               {{"agent", std::to_string(i + 1)},
                {"types", ti.points[block.front()] + "," + ti.points[t]}}});
          break;
        }
    }
  }
  if (!report.ok()) return report;

  std::vector<std::size_t> pmap = induced_point_map(src, dst, m);
  for (std::size_t i = 0; i < m.maps.size(); ++i) {
    for (std::size_t t = 0; t < src.types[i]->size(); ++t) {
      // Both sides are measures, so checking on dst product atoms suffices.
      Measure pushed = pushforward(src.beliefs[i][t], pmap, dst.prod.space);
      const Measure& target = dst.beliefs[i][m.maps[i][t]];
      if (!pushed.same_weights(target)) {
        std::size_t a = 0;
        while (pushed.weights[a] == target.weights[a]) ++a;
        report.violations.push_back(
            {"morphism_belief",
             {{"agent", std::to_string(i + 1)},
              {"type", src.types[i]->points[t]},
              {"event", atom_event_text(dst.prod, a)},
              {"pushforward", rat_to_fraction_string(pushed.weights[a])},
              {"target", rat_to_fraction_string(target.weights[a])}}});
      }
    }
  }
  return report;
}

std::uint64_t morphism_search_space(const TypeSpace& src, const TypeSpace& dst) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < src.types.size(); ++i)
    for (std::size_t t = 0; t < src.types[i]->size(); ++t) {
      std::uint64_t next = total * dst.types[i]->size();
      if (dst.types[i]->size() != 0 && next / dst.types[i]->size() != total)
        return UINT64_MAX;  // overflow
      total = next;
    }
  return total;
}

std::vector<TypeMorphism> find_type_morphisms(const TypeSpace& src,
                                              const TypeSpace& dst,
                                              std::uint64_t budget) {
  if (!(*src.states == *dst.states))
    throw Error(ErrKind::StateSpaceMismatch, "morphism requires a common state space");
  if (src.agents() != dst.agents())
    throw Error(ErrKind::ArityMismatch, "agent counts differ");
  if (morphism_search_space(src, dst) > budget)
    throw Error(ErrKind::BudgetExceeded, "morphism search space exceeds budget");

  // Sound prefilter: a morphism leaves the state marginal unchanged, so
  // f_i(t) must carry the same X-marginal as t.
  const std::size_t n = src.types.size();
  std::vector<std::vector<std::vector<std::size_t>>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    candidates[i].resize(src.types[i]->size());
    std::vector<Measure> dst_marg;
    for (std::size_t u = 0; u < dst.types[i]->size(); ++u)
      dst_marg.push_back(marginal(dst.prod, dst.beliefs[i][u], 0));
    for (std::size_t t = 0; t < src.types[i]->size(); ++t) {
      Measure src_marg = marginal(src.prod, src.beliefs[i][t], 0);
      for (std::size_t u = 0; u < dst.types[i]->size(); ++u)
        if (dst_marg[u].same_weights(src_marg)) candidates[i][t].push_back(u);
    }
  }

  // Flatten (agent, type) slots for mixed-radix enumeration.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < src.types[i]->size(); ++t) slots.emplace_back(i, t);
  for (const auto& [i, t] : slots)
    if (candidates[i][t].empty()) return {};

  std::vector<TypeMorphism> found;
  std::vector<std::size_t> choice(slots.size(), 0);
  while (true) {
    TypeMorphism m;
    m.maps.resize(n);
    for (std::size_t i = 0; i < n; ++i) m.maps[i].resize(src.types[i]->size());
    for (std::size_t s = 0; s < slots.size(); ++s)
      m.maps[slots[s].first][slots[s].second] =
          candidates[slots[s].first][slots[s].second][choice[s]];
    if (check_type_morphism(src, dst, m).ok()) found.push_back(std::move(m));
    std::size_t s = slots.size();
    while (s-- > 0) {
      if (++choice[s] < candidates[slots[s].first][slots[s].second].size()) break;
      choice[s] = 0;
      if (s == 0) return found;
    }
    if (slots.empty()) return found;
  }
}

const Event& TsEvaluator::truth_set(const Formula& f) {
  auto it = memo_.find(f);
  if (it != memo_.end()) return it->second;
  Event result = [&]() -> Event {
    switch (f.kind()) {
      case Conn::Atom:
        return its_->space.prod.cylinder(0, its_->event_of_atom(f.atom_name()));
      case Conn::Not:
        return truth_set(f.child()).complement();
      case Conn::And: {
        Event a = truth_set(f.lhs());
        return a.intersect(truth_set(f.rhs()));
      }
      case Conn::Believes: {
        Event operand = truth_set(f.child());
        const TypeSpace& ts = its_->space;
        const auto& beta = ts.beliefs[static_cast<std::size_t>(f.agent() - 1)];
        Event ti_event = event_from_mask(
            ts.types[static_cast<std::size_t>(f.agent() - 1)],
            threshold_preimage(beta, operand, f.theta()));
        return ts.prod.cylinder(static_cast<std::size_t>(f.agent()), ti_event);
      }
    }
    throw Error(ErrKind::Schema, "malformed formula");
  }();
  return memo_.emplace(f, std::move(result)).first->second;
}

}  // namespace belt
