#include "belief/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "belief/errors.hpp"

namespace belt {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrKind::Schema, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw Error(ErrKind::Schema, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrKind::Schema, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json& v : j) {
    if (!v.is_string()) throw Error(ErrKind::Schema, std::string(what) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

SpacePtr load_space(const Json& j) {
  std::vector<std::string> points = string_list(require(j, "points"), "points");
  const Json& atoms_json = require(j, "atoms");
  if (!atoms_json.is_array()) throw Error(ErrKind::Schema, "atoms must be an array");
  std::vector<std::vector<std::size_t>> atoms;
  for (const Json& block : atoms_json) {
    std::vector<std::size_t> indices;
    for (const std::string& name : string_list(block, "atom block")) {
      auto it = std::find(points.begin(), points.end(), name);
      if (it == points.end())
        throw Error(ErrKind::Schema, "atom block references unknown point '" + name + "'");
      indices.push_back(static_cast<std::size_t>(it - points.begin()));
    }
    atoms.push_back(std::move(indices));
  }
  return make_space(std::move(points), std::move(atoms));
}

Measure load_measure(const Json& j, SpacePtr space) {
  if (!j.is_object()) throw Error(ErrKind::Schema, "measure must be an object");
  std::vector<Rat> weights(space->atom_count(), Rat(0));
  std::vector<bool> seen(space->atom_count(), false);
  for (const auto& [key, val] : j.items()) {
    if (!val.is_string()) throw Error(ErrKind::Schema, "measure weights must be rational strings");
    std::size_t point;
    try {
      point = space->index_of(key);
    } catch (const Error&) {
      throw Error(ErrKind::Schema, "measure references unknown point '" + key + "'");
    }
    std::size_t atom = space->atom_of[point];
    if (seen[atom])
      throw Error(ErrKind::Schema, "measure assigns the atom of '" + key + "' twice");
    seen[atom] = true;
    weights[atom] = parse_rational(val.get<std::string>());
  }
  return Measure::from_atom_weights(std::move(space), std::move(weights));
}

ThresholdSet load_thresholds(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "dense") return ThresholdSet::dense_rationals();
    return ThresholdSet::parse(s);
  }
  if (j.is_array()) {
    std::vector<Rat> vals;
    for (const std::string& v : string_list(j, "thresholds"))
      vals.push_back(parse_rational(v));
    return ThresholdSet::explicit_set(std::move(vals));
  }
  throw Error(ErrKind::Schema, "thresholds must be \"dense\" or a list of rationals");
}

int load_agents(const Json& j) {
  const Json& v = require(j, "agents");
  if (!v.is_number_integer() || v.get<int>() < 1)
    throw Error(ErrKind::Schema, "agents must be a positive integer");
  return v.get<int>();
}

std::pair<std::vector<std::string>, std::vector<Event>> load_interp(
    const Json& doc, SpacePtr space) {
  std::vector<std::string> vocab;
  std::vector<Event> interp;
  if (!doc.contains("vocab")) return {vocab, interp};
  vocab = string_list(doc.at("vocab"), "vocab");
  const Json& interp_json = require(doc, "interp");
  for (const std::string& p : vocab) {
    if (!interp_json.contains(p))
      throw Error(ErrKind::Schema, "interp missing atom '" + p + "'");
    std::vector<std::string> pts = string_list(interp_json.at(p), "interp entry");
    try {
      interp.push_back(event_from_points(space, pts));
    } catch (const Error& e) {
      if (e.kind() == ErrKind::NonMeasurableMap)
        throw Error(ErrKind::Schema, "interp of '" + p + "' is not measurable");
      throw Error(ErrKind::Schema, "interp of '" + p + "': " + e.what());
    }
  }
  return {std::move(vocab), std::move(interp)};
}

Model load_model(const Json& doc) {
  Model m;
  m.frame.worlds = load_space(require(doc, "worlds"));
  m.frame.agents = load_agents(doc);
  const Json& beliefs = require(doc, "beliefs");
  if (!beliefs.is_array() || beliefs.size() != static_cast<std::size_t>(m.frame.agents))
    throw Error(ErrKind::Schema, "beliefs must be one object per agent");
  for (const Json& per_agent : beliefs) {
    std::vector<Measure> pr;
    for (const auto& name : m.frame.worlds->points) {
      if (!per_agent.contains(name))
        throw Error(ErrKind::Schema, "beliefs missing world '" + name + "'");
      pr.push_back(load_measure(per_agent.at(name), m.frame.worlds));
    }
    m.frame.pr.push_back(std::move(pr));
  }
  std::tie(m.vocab, m.interp) = load_interp(doc, m.frame.worlds);
  return m;
}

InterpretedTypeSpace load_typespace(const Json& doc) {
  SpacePtr states = load_space(require(doc, "states"));
  const Json& types_json = require(doc, "types");
  if (!types_json.is_array() || types_json.empty())
    throw Error(ErrKind::Schema, "types must be a nonempty array of spaces");
  std::vector<SpacePtr> types;
  for (const Json& t : types_json) types.push_back(load_space(t));

  std::vector<SpacePtr> factors{states};
  for (const auto& t : types) factors.push_back(t);
  ProductSpace prod = product(factors);

  const Json& beliefs_json = require(doc, "beliefs");
  if (!beliefs_json.is_array() || beliefs_json.size() != types.size())
    throw Error(ErrKind::Schema, "beliefs must be one object per agent");
  std::vector<std::vector<Measure>> beliefs;
  for (std::size_t i = 0; i < types.size(); ++i) {
    std::vector<Measure> per_type;
    for (const auto& name : types[i]->points) {
      if (!beliefs_json[i].contains(name))
        throw Error(ErrKind::Schema, "beliefs missing type '" + name + "'");
      per_type.push_back(load_measure(beliefs_json[i].at(name), prod.space));
    }
    beliefs.push_back(std::move(per_type));
  }

  InterpretedTypeSpace its;
  its.space = make_typespace(states, std::move(types), std::move(beliefs));
  std::tie(its.vocab, its.interp) = load_interp(doc, states);
  return its;
}

Json save_measure(const Measure& mu) {
  Json out = Json::object();
  for (std::size_t a = 0; a < mu.weights.size(); ++a)
    out[mu.space->points[mu.space->atoms[a].front()]] =
        rat_to_fraction_string(mu.weights[a]);
  return out;
}

Json save_interp(const std::vector<std::string>& vocab,
                 const std::vector<Event>& interp) {
  Json out = Json::object();
  for (std::size_t p = 0; p < vocab.size(); ++p) out[vocab[p]] = interp[p].point_names();
  return out;
}

}  // namespace

Json space_to_json(const Space& s) {
  Json atoms = Json::array();
  for (const auto& block : s.atoms) {
    Json names = Json::array();
    for (std::size_t p : block) names.push_back(s.points[p]);
    atoms.push_back(std::move(names));
  }
  return Json{{"points", s.points}, {"atoms", std::move(atoms)}};
}

Json model_to_json(const Model& m, const ThresholdSet& thresholds) {
  Json beliefs = Json::array();
  for (const auto& per_agent : m.frame.pr) {
    Json obj = Json::object();
    for (std::size_t w = 0; w < per_agent.size(); ++w)
      obj[m.frame.worlds->points[w]] = save_measure(per_agent[w]);
    beliefs.push_back(std::move(obj));
  }
  Json out{{"kind", "model"},
           {"version", 1},
           {"thresholds", thresholds.to_string()},
           {"agents", m.frame.agents},
           {"worlds", space_to_json(*m.frame.worlds)},
           {"beliefs", std::move(beliefs)}};
  if (!m.vocab.empty()) {
    out["vocab"] = m.vocab;
    out["interp"] = save_interp(m.vocab, m.interp);
  }
  return out;
}

Json typespace_to_json(const InterpretedTypeSpace& its, const ThresholdSet& thresholds) {
  const TypeSpace& ts = its.space;
  Json types = Json::array();
  for (const auto& t : ts.types) types.push_back(space_to_json(*t));
  Json beliefs = Json::array();
  for (std::size_t i = 0; i < ts.beliefs.size(); ++i) {
    Json obj = Json::object();
    for (std::size_t t = 0; t < ts.beliefs[i].size(); ++t)
      obj[ts.types[i]->points[t]] = save_measure(ts.beliefs[i][t]);
    beliefs.push_back(std::move(obj));
  }
  Json out{{"kind", "typespace"},
           {"version", 1},
           {"thresholds", thresholds.to_string()},
           {"agents", ts.agents()},
           {"states", space_to_json(*ts.states)},
           {"types", std::move(types)},
           {"beliefs", std::move(beliefs)}};
  if (!its.vocab.empty()) {
    out["vocab"] = its.vocab;
    out["interp"] = save_interp(its.vocab, its.interp);
  }
  return out;
}

Json family_to_json(const ModelFamily& fam, const ThresholdSet& thresholds) {
  Json members = Json::array();
  for (const Model& m : fam.members) members.push_back(model_to_json(m, thresholds));
  return Json{{"kind", "family"},
              {"version", 1},
              {"thresholds", thresholds.to_string()},
              {"members", std::move(members)}};
}

Json morphism_to_json(const TypeMorphism& m, const TypeSpace& src, const TypeSpace& dst) {
  Json maps = Json::array();
  for (std::size_t i = 0; i < m.maps.size(); ++i) {
    Json obj = Json::object();
    for (std::size_t t = 0; t < m.maps[i].size(); ++t)
      obj[src.types[i]->points[t]] = dst.types[i]->points[m.maps[i][t]];
    maps.push_back(std::move(obj));
  }
  return Json{{"kind", "morphism"}, {"version", 1}, {"maps", std::move(maps)}};
}

Json report_to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json w = Json::object();
    for (const auto& [key, val] : v.witness) w[key] = val;
    violations.push_back(Json{{"condition", v.condition}, {"witness", std::move(w)}});
  }
  return Json{{"ok", report.ok()}, {"violations", std::move(violations)}};
}

Document json_to_document(const Json& j) {
  Document doc;
  doc.kind = require_string(j, "kind");
  if (j.contains("thresholds")) doc.thresholds = load_thresholds(j.at("thresholds"));
  if (doc.kind == "model") {
    doc.model = load_model(j);
  } else if (doc.kind == "typespace") {
    doc.typespace = load_typespace(j);
  } else if (doc.kind == "family") {
    const Json& members = require(j, "members");
    if (!members.is_array() || members.empty())
      throw Error(ErrKind::Schema, "family members must be a nonempty array");
    ModelFamily fam;
    for (const Json& m : members) fam.members.push_back(load_model(m));
    doc.family = std::move(fam);
  } else if (doc.kind == "space") {
    doc.space = load_space(j);
  } else if (doc.kind == "morphism") {
    const Json& maps = require(j, "maps");
    if (!maps.is_array()) throw Error(ErrKind::Schema, "maps must be an array");
    std::vector<std::vector<std::pair<std::string, std::string>>> out;
    for (const Json& obj : maps) {
      if (!obj.is_object()) throw Error(ErrKind::Schema, "each map must be an object");
      std::vector<std::pair<std::string, std::string>> entries;
      for (const auto& [key, val] : obj.items()) {
        if (!val.is_string()) throw Error(ErrKind::Schema, "map targets must be strings");
        entries.emplace_back(key, val.get<std::string>());
      }
      out.push_back(std::move(entries));
    }
    doc.morphism = std::move(out);
  } else {
    throw Error(ErrKind::Schema, "unknown document kind '" + doc.kind + "'");
  }
  return doc;
}

Document parse_document(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrKind::Schema, "invalid JSON");
  return json_to_document(j);
}

Document load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

Json document_to_json(const Document& doc) {
  ThresholdSet ths = doc.thresholds.value_or(ThresholdSet::dense_rationals());
  if (doc.kind == "model") return model_to_json(*doc.model, ths);
  if (doc.kind == "typespace") return typespace_to_json(*doc.typespace, ths);
  if (doc.kind == "family") return family_to_json(*doc.family, ths);
  if (doc.kind == "space") {
    Json out = space_to_json(*doc.space);
    out["kind"] = "space";
    out["version"] = 1;
    return out;
  }
  throw Error(ErrKind::Schema, "cannot serialize document kind '" + doc.kind + "'");
}

TypeMorphism resolve_morphism(
    const std::vector<std::vector<std::pair<std::string, std::string>>>& maps,
    const TypeSpace& src, const TypeSpace& dst) {
  if (maps.size() != src.types.size())
    throw Error(ErrKind::ArityMismatch, "morphism agent count does not match");
  TypeMorphism m;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::vector<std::size_t> out(src.types[i]->size(), SIZE_MAX);
    for (const auto& [from, to] : maps[i])
      out[src.types[i]->index_of(from)] = dst.types[i]->index_of(to);
    for (std::size_t t = 0; t < out.size(); ++t)
      if (out[t] == SIZE_MAX)
        throw Error(ErrKind::Schema,
                    "morphism missing type '" + src.types[i]->points[t] + "'");
    m.maps.push_back(std::move(out));
  }
  return m;
}

}  // namespace belt
