#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "belief/typespaces.hpp"
#include "belief/universal.hpp"

namespace belt {

using Json = nlohmann::json;

// A parsed structure document. Exactly one payload is populated according
// to `kind`; thresholds are carried when the document declares them.
struct Document {
  std::string kind;  // "model" | "typespace" | "family" | "space" | "morphism"
  std::optional<ThresholdSet> thresholds;

  std::optional<Model> model;
  std::optional<InterpretedTypeSpace> typespace;
  std::optional<ModelFamily> family;
  SpacePtr space;
  // Morphism maps keyed by type point names, one per agent.
  std::optional<std::vector<std::vector<std::pair<std::string, std::string>>>> morphism;
};

Document json_to_document(const Json& j);        // throws Schema
Document parse_document(const std::string& text);  // throws Schema / Syntax
Document load_document_file(const std::string& path);  // throws Io as well

Json space_to_json(const Space& s);
Json model_to_json(const Model& m, const ThresholdSet& thresholds);
Json typespace_to_json(const InterpretedTypeSpace& its, const ThresholdSet& thresholds);
Json family_to_json(const ModelFamily& fam, const ThresholdSet& thresholds);
Json morphism_to_json(const TypeMorphism& m, const TypeSpace& src, const TypeSpace& dst);
Json document_to_json(const Document& doc);

Json report_to_json(const ValidationReport& report);

// Resolves a morphism document's name-keyed maps against concrete spaces.
TypeMorphism resolve_morphism(
    const std::vector<std::vector<std::pair<std::string, std::string>>>& maps,
    const TypeSpace& src, const TypeSpace& dst);

}  // namespace belt
