#include "belief.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "belief/serialize.hpp"
#include "belief/translate.hpp"
#include "belief/universal.hpp"

using namespace belt;

struct bt_doc {
  Document doc;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** slot, const Json& j) {
  if (slot) *slot = dup_string(j.dump(2));
}

Json error_json(const Error& e) {
  return Json{{"error", Json{{"kind", err_kind_name(e.kind())},
                             {"message", e.what()}}}};
}

Json measure_json(const Measure& mu) {
  Json out = Json::object();
  for (std::size_t a = 0; a < mu.weights.size(); ++a)
    out[mu.space->points[mu.space->atoms[a].front()]] =
        rat_to_fraction_string(mu.weights[a]);
  return out;
}

bt_status fail(const Error& e, char** report) {
  if (auto* nu = dynamic_cast<const NonUniqueBeliefError*>(&e)) {
    Json j = error_json(e);
    j["agent"] = nu->agent;
    j["type"] = nu->type_name;
    j["candidates"] = Json::array({measure_json(nu->first), measure_json(nu->second)});
    emit(report, j);
    return BT_REFUSAL;
  }
  emit(report, error_json(e));
  return e.kind() == ErrKind::NonUniqueBeliefExtension ? BT_REFUSAL
                                                       : BT_INPUT_ERROR;
}

bt_status fail_other(const std::exception& e, char** report) {
  emit(report, Json{{"error", Json{{"kind", "InternalError"}, {"message", e.what()}}}});
  return BT_INPUT_ERROR;
}

ThresholdSet resolve_thresholds(const Document& doc, const char* arg) {
  if (arg) {
    std::string s(arg);
    return s == "dense" ? ThresholdSet::dense_rationals() : ThresholdSet::parse(s);
  }
  return doc.thresholds.value_or(ThresholdSet::dense_rationals());
}

const Model& need_model(const Document& doc) {
  if (!doc.model) throw Error(ErrKind::Schema, "expected a model document");
  return *doc.model;
}

const InterpretedTypeSpace& need_typespace(const Document& doc) {
  if (!doc.typespace) throw Error(ErrKind::Schema, "expected a typespace document");
  return *doc.typespace;
}

std::vector<std::string> class_names(const Space& worlds,
                                     const std::vector<std::size_t>& members) {
  std::vector<std::string> out;
  for (std::size_t w : members) out.push_back(worlds.points[w]);
  return out;
}

Json partition_json(const Space& worlds, const DescriptionPartition& part,
                    const std::vector<std::size_t>& assignment) {
  Json out = Json::array();
  for (const auto& members : part.classes_of(assignment))
    out.push_back(class_names(worlds, members));
  return out;
}

}  // namespace

extern "C" {

bt_status bt_doc_parse(const char* json_text, bt_doc** out, char** report) {
  if (!json_text || !out) return BT_INPUT_ERROR;
  try {
    auto* d = new bt_doc{parse_document(json_text)};
    *out = d;
    return BT_OK;
  } catch (const Error& e) {
    return fail(e, report);
  } catch (const std::exception& e) {
    return fail_other(e, report);
  }
}

bt_status bt_doc_read_file(const char* path, bt_doc** out, char** report) {
  if (!path || !out) return BT_INPUT_ERROR;
  try {
    auto* d = new bt_doc{load_document_file(path)};
    *out = d;
    return BT_OK;
  } catch (const Error& e) {
    return fail(e, report);
  } catch (const std::exception& e) {
    return fail_other(e, report);
  }
}

const char* bt_doc_kind(const bt_doc* doc) {
  return doc ? doc->doc.kind.c_str() : nullptr;
}

bt_status bt_doc_to_json(const bt_doc* doc, char** out_json) {
  if (!doc || !out_json) return BT_INPUT_ERROR;
  try {
    emit(out_json, document_to_json(doc->doc));
    return BT_OK;
  } catch (const Error& e) {
    return fail(e, out_json);
  } catch (const std::exception& e) {
    return fail_other(e, out_json);
  }
}

void bt_doc_free(bt_doc* doc) { delete doc; }

void bt_string_free(char* s) { std::free(s); }

bt_status bt_validate(const bt_doc* doc, const char* thresholds, char** report) {
  if (!doc) return BT_INPUT_ERROR;
  try {
    ThresholdSet ths = resolve_thresholds(doc->doc, thresholds);
    ValidationReport r;
    if (doc->doc.model) {
      r = validate_model(*doc->doc.model, ths);
    } else if (doc->doc.typespace) {
      r = validate_interpreted(*doc->doc.typespace, ths);
    } else if (doc->doc.family) {
      const auto& members = doc->doc.family->members;
      for (std::size_t k = 0; k < members.size(); ++k) {
        ValidationReport sub = validate_model(members[k], ths);
        for (Violation v : sub.violations) {
          v.witness["member"] = std::to_string(k);
          r.violations.push_back(std::move(v));
        }
      }
    } else if (doc->doc.space) {
      // make_space already enforced the partition conditions
    } else {
      throw Error(ErrKind::Schema, "document kind '" + doc->doc.kind +
                                       "' has nothing to validate");
    }
    emit(report, report_to_json(r));
    return r.ok() ? BT_OK : BT_VIOLATION;
  } catch (const Error& e) {
    return fail(e, report);
  } catch (const std::exception& e) {
    return fail_other(e, report);
  }
}

bt_status bt_eval(const bt_doc* doc, const char* thresholds, const char* formula,
                  char** report) {
  if (!doc || !formula) return BT_INPUT_ERROR;
  try {
    ThresholdSet ths = resolve_thresholds(doc->doc, thresholds);
    Json out;
    if (doc->doc.model) {
      const Model& m = *doc->doc.model;
      Formula f = parse_formula(formula, m.vocab, m.frame.agents, ths);
      Event e = truth_set(m, f);
      out = Json{{"formula", f.render()},
                 {"points", e.point_names()},
                 {"valid", e.full()},
                 {"satisfiable", !e.empty()}};
    } else {
      const InterpretedTypeSpace& its = need_typespace(doc->doc);
      Formula f = parse_formula(formula, its.vocab, its.space.agents(), ths);
      Event e = truth_set_ts(its, f);
      out = Json{{"formula", f.render()},
                 {"points", e.point_names()},
                 {"valid", e.full()},
                 {"satisfiable", !e.empty()}};
    }
    emit(report, out);
    return BT_OK;
  } catch (const Error& e) {
    return fail(e, report);
  } catch (const std::exception& e) {
    return fail_other(e, report);
  }
}

bt_status bt_describe(const bt_doc* doc, const char* thresholds, char** report) {
  if (!doc) return BT_INPUT_ERROR;
  try {
    const Model& m = need_model(doc->doc);
    ThresholdSet ths = resolve_thresholds(doc->doc, thresholds);
    DescriptionPartition part = description_partition(m, ths);
    const Space& worlds = *m.frame.worlds;
    Json agents = Json::array();
    for (const auto& assignment : part.agent)
      agents.push_back(partition_json(worlds, part, assignment));
    emit(report, Json{{"thresholds", ths.to_string()},
                      {"zero", partition_json(worlds, part, part.zero)},
                      {"full", partition_json(worlds, part, part.full)},
                      {"agent", std::move(agents)}});
    return BT_OK;
  } catch (const Error& e) {
    return fail(e, report);
  } catch (const std::exception& e) {
    return fail_other(e, report);
  }
}

bt_status bt_translate(const bt_doc* doc, const char* direction,
                       const char* thresholds, bt_doc** out, char** report) {
  if (!doc || !direction || !out) return BT_INPUT_ERROR;
  try {
    ThresholdSet ths = resolve_thresholds(doc->doc, thresholds);
    std::string dir(direction);
    Document result;
    result.thresholds = ths;
    if (dir == "t2m") {
      result.kind = "model";
      result.model = interpreted_to_model(need_typespace(doc->doc));
    } else if (dir == "m2t") {
      const Model& m = need_model(doc->doc);
      FactoredTypeSpace fts = model_to_typespace(m, ths);
      result.kind = "typespace";
      result.typespace = fts.result;
      if (report) {
        Json states = Json::object();
        Json types = Json::array();
        const TypeSpace& ts = fts.result.space;
        for (std::size_t w = 0; w < m.frame.worlds->size(); ++w)
          states[m.frame.worlds->points[w]] =
              ts.states->points[fts.state_of_world[w]];
        for (std::size_t i = 0; i < fts.type_of_world.size(); ++i) {
          Json per = Json::object();
          for (std::size_t w = 0; w < m.frame.worlds->size(); ++w)
            per[m.frame.worlds->points[w]] =
                ts.types[i]->points[fts.type_of_world[i][w]];
          types.push_back(std::move(per));
        }
        emit(report, Json{{"state_of_world", std::move(states)},
                          {"type_of_world", std::move(types)}});
      }
    } else {
      throw Error(ErrKind::Schema, "direction must be t2m or m2t");
    }
    *out = new bt_doc{std::move(result)};
    return BT_OK;
  } catch (const Error& e) {
    return fail(e, report);
  } catch (const std::exception& e) {
    return fail_other(e, report);
  }
}

bt_status bt_witness_merge(const bt_doc* doc, const char* const* targets,
                           size_t n_targets, bt_doc** out, char** report) {
  if (!doc || !targets || !out) return BT_INPUT_ERROR;
  try {
    const Model& m = need_model(doc->doc);
    std::vector<std::size_t> idx;
    for (size_t k = 0; k < n_targets; ++k)
      idx.push_back(m.frame.worlds->index_of(targets[k]));
    auto [merged, star] = witness_merge(m, idx);
    Document result;
    result.kind = "model";
    result.thresholds = doc->doc.thresholds;
    std::string star_name = merged.frame.worlds->points[star];
    result.model = std::move(merged);
    *out = new bt_doc{std::move(result)};
    emit(report, Json{{"star", star_name}});
    return BT_OK;
  } catch (const Error& e) {
    return fail(e, report);
  } catch (const std::exception& e) {
    return fail_other(e, report);
  }
}

bt_status bt_universal_model(const bt_doc* const* members, size_t n_members,
                             bt_doc** out, char** report) {
  if (!members || n_members == 0 || !out) return BT_INPUT_ERROR;
  try {
    ModelFamily fam;
    for (size_t k = 0; k < n_members; ++k) {
      const Document& d = members[k]->doc;
      if (d.model)
        fam.members.push_back(*d.model);
      else if (d.family)
        for (const Model& m : d.family->members) fam.members.push_back(m);
      else
        throw Error(ErrKind::Schema, "expected model or family documents");
    }
    UniversalModelResult umr = universal_model(fam, ThresholdSet::dense_rationals());
    Document result;
    result.kind = "model";
    result.thresholds = ThresholdSet::dense_rationals();
    if (report) {
      Json maps = Json::array();
      for (std::size_t k = 0; k < fam.members.size(); ++k) {
        Json per = Json::object();
        const Space& src = *fam.members[k].frame.worlds;
        for (std::size_t w = 0; w < src.size(); ++w)
          per[src.points[w]] =
              umr.model.frame.worlds->points[umr.description_maps[k][w]];
        maps.push_back(std::move(per));
      }
      emit(report, Json{{"description_maps", std::move(maps)}});
    }
    result.model = std::move(umr.model);
    *out = new bt_doc{std::move(result)};
    return BT_OK;
  } catch (const Error& e) {
    return fail(e, report);
  } catch (const std::exception& e) {
    return fail_other(e, report);
  }
}

bt_status bt_universal_typespace(const bt_doc* const* members, size_t n_members,
                                 const bt_doc* states, uint64_t budget,
                                 bt_doc** out, char** report) {
  if (!members || n_members == 0 || !out) return BT_INPUT_ERROR;
  try {
    std::vector<TypeSpace> fam;
    for (size_t k = 0; k < n_members; ++k)
      fam.push_back(need_typespace(members[k]->doc).space);
    SpacePtr x = fam.front().states;
    if (states) {
      if (!states->doc.space)
        throw Error(ErrKind::Schema, "expected a space document for states");
      x = states->doc.space;
    }
    UniversalTypeSpaceResult r = universal_typespace(x, fam, budget);
    if (report) {
      Json morphisms = Json::array();
      Json certs = Json::array();
      for (std::size_t k = 0; k < fam.size(); ++k) {
        morphisms.push_back(morphism_to_json(r.morphisms[k], fam[k], r.space));
        const UniquenessCertificate& c = r.certificates[k];
        Json cj{{"certified", c.certified},
                {"search_space", c.search_space}};
        if (c.certified) cj["morphism_count"] = c.morphism_count;
        certs.push_back(std::move(cj));
      }
      emit(report, Json{{"morphisms", std::move(morphisms)},
                        {"certificates", std::move(certs)}});
    }
    Document result;
    result.kind = "typespace";
    result.thresholds = ThresholdSet::dense_rationals();
    result.typespace = InterpretedTypeSpace{std::move(r.space), {}, {}};
    *out = new bt_doc{std::move(result)};
    return BT_OK;
  } catch (const Error& e) {
    return fail(e, report);
  } catch (const std::exception& e) {
    return fail_other(e, report);
  }
}

bt_status bt_morphism_check(const bt_doc* src, const bt_doc* dst,
                            const bt_doc* morphism, char** report) {
  if (!src || !dst || !morphism) return BT_INPUT_ERROR;
  try {
    const TypeSpace& s = need_typespace(src->doc).space;
    const TypeSpace& d = need_typespace(dst->doc).space;
    if (!morphism->doc.morphism)
      throw Error(ErrKind::Schema, "expected a morphism document");
    TypeMorphism m = resolve_morphism(*morphism->doc.morphism, s, d);
    ValidationReport r = check_type_morphism(s, d, m);
    emit(report, report_to_json(r));
    return r.ok() ? BT_OK : BT_VIOLATION;
  } catch (const Error& e) {
    return fail(e, report);
  } catch (const std::exception& e) {
    return fail_other(e, report);
  }
}

}  // extern "C"
