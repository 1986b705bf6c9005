#include "belief/universal.hpp"

#include <algorithm>
#include <string>

#include "belief/errors.hpp"

namespace belt {

namespace {

std::string sorted_join(std::vector<std::string> names, char sep) {
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k) out += sep;
    out += names[k];
  }
  return out;
}

}  // namespace

Model disjoint_union(const ModelFamily& fam) {
  if (fam.members.empty())
    throw Error(ErrKind::Schema, "family must have at least one member");
  const Model& head = fam.members.front();
  for (const Model& m : fam.members) {
    if (m.vocab != head.vocab)
      throw Error(ErrKind::VocabMismatch, "family members disagree on vocabulary");
    if (m.frame.agents != head.frame.agents)
      throw Error(ErrKind::ArityMismatch, "family members disagree on agent count");
  }

  std::vector<std::string> points;
  std::vector<std::vector<std::size_t>> atoms;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (std::size_t k = 0; k < fam.members.size(); ++k) {
    const Space& omega = *fam.members[k].frame.worlds;
    offset.push_back(total);
    for (const auto& name : omega.points)
      points.push_back(name + "@" + std::to_string(k));
    for (const auto& block : omega.atoms) {
      std::vector<std::size_t> tagged;
      for (std::size_t p : block) tagged.push_back(total + p);
      atoms.push_back(std::move(tagged));
    }
    total += omega.size();
  }
  SpacePtr worlds = make_space(std::move(points), std::move(atoms));

  // Atom offset of each member's copy.
  std::vector<std::size_t> atom_offset;
  {
    std::size_t a = 0;
    for (const Model& m : fam.members) {
      atom_offset.push_back(a);
      a += m.frame.worlds->atom_count();
    }
  }

  Model out;
  out.frame.worlds = worlds;
  out.frame.agents = head.frame.agents;
  out.frame.pr.resize(static_cast<std::size_t>(head.frame.agents));
  for (int i = 1; i <= head.frame.agents; ++i) {
    auto& pr = out.frame.pr[static_cast<std::size_t>(i - 1)];
    pr.reserve(worlds->size());
    for (std::size_t k = 0; k < fam.members.size(); ++k) {
      const Model& m = fam.members[k];
      for (std::size_t w = 0; w < m.frame.worlds->size(); ++w) {
        std::vector<Rat> weights(worlds->atom_count(), Rat(0));
        const Measure& mu = m.frame.belief(i, w);
        for (std::size_t a = 0; a < mu.weights.size(); ++a)
          weights[atom_offset[k] + a] = mu.weights[a];
        pr.push_back(Measure{worlds, std::move(weights)});
      }
    }
  }

  out.vocab = head.vocab;
  for (std::size_t p = 0; p < head.vocab.size(); ++p) {
    std::vector<bool> mask(worlds->size(), false);
    for (std::size_t k = 0; k < fam.members.size(); ++k) {
      const Model& m = fam.members[k];
      for (std::size_t w = 0; w < m.frame.worlds->size(); ++w)
        mask[offset[k] + w] = m.interp[p].contains_point(w);
    }
    out.interp.push_back(event_from_mask(worlds, mask));
  }
  return out;
}

UniversalModelResult universal_model(const ModelFamily& fam,
                                     const ThresholdSet& thresholds) {
  if (!thresholds.dense)
    throw Error(ErrKind::NonDenseThresholds,
                "universal model construction requires dense thresholds");
  Model u = disjoint_union(fam);
  DescriptionPartition part = description_partition(u, thresholds);
  auto classes = part.classes_of(part.full);

  // Worlds of the quotient: realized descriptions, named by their members.
  // Distinct classes are separated by formulas, so the algebra is discrete.
  std::vector<std::string> names;
  for (const auto& members : classes) {
    std::vector<std::string> member_names;
    for (std::size_t w : members) member_names.push_back(u.frame.worlds->points[w]);
    names.push_back(sorted_join(std::move(member_names), '+'));
  }
  SpacePtr worlds = make_discrete_space(names);

  UniversalModelResult out;
  out.model.frame.worlds = worlds;
  out.model.frame.agents = u.frame.agents;
  out.model.frame.pr.resize(static_cast<std::size_t>(u.frame.agents));
  for (int i = 1; i <= u.frame.agents; ++i) {
    auto& pr = out.model.frame.pr[static_cast<std::size_t>(i - 1)];
    for (std::size_t c = 0; c < classes.size(); ++c) {
      Measure first = pushforward(u.frame.belief(i, classes[c].front()), part.full, worlds);
      for (std::size_t k = 1; k < classes[c].size(); ++k) {
        Measure other = pushforward(u.frame.belief(i, classes[c][k]), part.full, worlds);
        if (!other.same_weights(first))
          throw Error(ErrKind::NonUniqueBeliefExtension,
                      "witnesses of a description class disagree");
      }
      pr.push_back(std::move(first));
    }
  }
  out.model.vocab = u.vocab;
  for (std::size_t p = 0; p < u.vocab.size(); ++p) {
    std::vector<bool> mask(worlds->size(), false);
    for (std::size_t c = 0; c < classes.size(); ++c)
      mask[c] = u.interp[p].contains_point(classes[c].front());
    out.model.interp.push_back(event_from_mask(worlds, mask));
  }

  std::size_t offset = 0;
  for (const Model& m : fam.members) {
    std::vector<std::size_t> dmap;
    for (std::size_t w = 0; w < m.frame.worlds->size(); ++w)
      dmap.push_back(part.full[offset + w]);
    out.description_maps.push_back(std::move(dmap));
    offset += m.frame.worlds->size();
  }
  return out;
}

UniversalTypeSpaceResult universal_typespace(const SpacePtr& states,
                                             const std::vector<TypeSpace>& fam,
                                             std::uint64_t budget) {
  for (const auto& block : states->atoms)
    if (block.size() != 1)
      throw Error(ErrKind::NonSingletonStateAlgebra,
                  "state algebra must be generated by singletons");
  if (fam.empty())
    throw Error(ErrKind::Schema, "family must have at least one member");
  for (const TypeSpace& ts : fam)
    if (!(*ts.states == *states))
      throw Error(ErrKind::StateSpaceMismatch,
                  "family member has a different state space");

  // Interpret each member over Phi = X with nu(x) = {x}; then the atom
  // interpretations partition the worlds of the induced model.
  ModelFamily models;
  for (const TypeSpace& ts : fam) {
    InterpretedTypeSpace its;
    its.space = ts;
    its.vocab = states->points;
    for (std::size_t x = 0; x < states->size(); ++x) {
      std::vector<bool> mask(states->size(), false);
      mask[x] = true;
      its.interp.push_back(event_from_mask(states, mask));
    }
    models.members.push_back(interpreted_to_model(its));
  }

  UniversalModelResult umr = universal_model(models, ThresholdSet::dense_rationals());
  FactoredTypeSpace fts = model_to_typespace(umr.model, ThresholdSet::dense_rationals());

  // Each 0-description class holds exactly one x; relabel the factored
  // states back onto X along that bijection.
  const TypeSpace& raw = fts.result.space;
  if (raw.states->size() != states->size())
    throw Error(ErrKind::Schema, "state classes do not biject with X");
  std::vector<std::size_t> state_to_x(raw.states->size());
  {
    auto zero_classes = fts.partition.classes_of(fts.partition.zero);
    for (std::size_t c = 0; c < zero_classes.size(); ++c) {
      std::size_t rep = zero_classes[c].front();
      std::size_t found = SIZE_MAX;
      for (std::size_t x = 0; x < states->size(); ++x)
        if (umr.model.interp[x].contains_point(rep)) {
          found = x;
          break;
        }
      if (found == SIZE_MAX)
        throw Error(ErrKind::Schema, "state class satisfies no x");
      state_to_x[c] = found;
    }
  }
  std::vector<SpacePtr> star_factors{states};
  for (const auto& t : raw.types) star_factors.push_back(t);
  ProductSpace star_prod = product(star_factors);
  std::vector<std::size_t> relabel(raw.prod.space->size());
  for (std::size_t p = 0; p < relabel.size(); ++p) {
    std::vector<std::size_t> tuple = raw.prod.tuple_of(p);
    tuple[0] = state_to_x[tuple[0]];
    relabel[p] = star_prod.point_index(tuple);
  }
  std::vector<std::vector<Measure>> beliefs;
  for (const auto& per_agent : raw.beliefs) {
    std::vector<Measure> out;
    for (const Measure& mu : per_agent)
      out.push_back(pushforward(mu, relabel, star_prod.space));
    beliefs.push_back(std::move(out));
  }
  UniversalTypeSpaceResult result;
  result.space = make_typespace(states, raw.types, std::move(beliefs));

  // Morphisms: each member type goes to the i-description class of any
  // world of the induced model that realizes it.
  for (std::size_t k = 0; k < fam.size(); ++k) {
    const TypeSpace& member = fam[k];
    TypeMorphism m;
    for (int i = 1; i <= member.agents(); ++i) {
      std::vector<std::size_t> map(member.types[static_cast<std::size_t>(i - 1)]->size());
      for (std::size_t t = 0; t < map.size(); ++t) {
        // First world of X x T whose i-component is t.
        std::size_t w = SIZE_MAX;
        for (std::size_t p = 0; p < member.prod.space->size(); ++p)
          if (member.prod.component(p, static_cast<std::size_t>(i)) == t) {
            w = p;
            break;
          }
        std::size_t quotient_world = umr.description_maps[k][w];
        map[t] = fts.type_of_world[static_cast<std::size_t>(i - 1)][quotient_world];
      }
      m.maps.push_back(std::move(map));
    }
    result.morphisms.push_back(std::move(m));
  }

  for (std::size_t k = 0; k < fam.size(); ++k) {
    UniquenessCertificate cert;
    cert.search_space = morphism_search_space(fam[k], result.space);
    if (cert.search_space <= budget) {
      cert.morphism_count = find_type_morphisms(fam[k], result.space, budget).size();
      cert.certified = true;
    }
    result.certificates.push_back(cert);
  }
  return result;
}

ValidationReport check_universality(const TypeSpace& candidate,
                                    const std::vector<TypeSpace>& fam,
                                    std::uint64_t budget) {
  ValidationReport report;
  for (std::size_t k = 0; k < fam.size(); ++k) {
    auto morphisms = find_type_morphisms(fam[k], candidate, budget);
    if (morphisms.empty())
      report.violations.push_back(
          {"existence", {{"member", std::to_string(k)}}});
    else if (morphisms.size() > 1)
      report.violations.push_back(
          {"uniqueness",
           {{"member", std::to_string(k)},
            {"morphisms", std::to_string(morphisms.size())}}});
  }
  return report;
}

}  // namespace belt
