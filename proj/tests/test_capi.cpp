#include "doctest.h"

#include <string>

#include "json.hpp"

#include "belief.h"

namespace {

using Json = nlohmann::json;

struct Doc {
  bt_doc* d = nullptr;
  ~Doc() { bt_doc_free(d); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  bt_string_free(s);
  return out;
}

const char* kCoin = R"({
  "kind": "model", "agents": 1, "thresholds": "dense",
  "worlds": {"points": ["u", "v"], "atoms": [["u"], ["v"]]},
  "beliefs": [{"u": {"u": "1/2", "v": "1/2"}, "v": {"u": "1/2", "v": "1/2"}}],
  "vocab": ["p"], "interp": {"p": ["u"]}
})";

const char* kSwapped = R"({
  "kind": "model", "agents": 1,
  "worlds": {"points": ["u", "v"], "atoms": [["u"], ["v"]]},
  "beliefs": [{"u": {"v": "1"}, "v": {"u": "1"}}],
  "vocab": ["p"], "interp": {"p": ["u"]}
})";

}  // namespace

TEST_CASE("parse, kind, serialize, free") {
  Doc doc;
  char* report = nullptr;
  REQUIRE(bt_doc_parse(kCoin, &doc.d, &report) == BT_OK);
  CHECK(std::string(bt_doc_kind(doc.d)) == "model");
  char* out = nullptr;
  REQUIRE(bt_doc_to_json(doc.d, &out) == BT_OK);
  Json j = Json::parse(take(out));
  CHECK(j["kind"] == "model");
  CHECK(j["beliefs"][0]["u"]["u"] == "1/2");
}

TEST_CASE("parse errors set INPUT_ERROR with a kind") {
  Doc doc;
  char* report = nullptr;
  CHECK(bt_doc_parse("{\"kind\":\"model\"}", &doc.d, &report) == BT_INPUT_ERROR);
  Json j = Json::parse(take(report));
  CHECK(j["error"]["kind"] == "SchemaError");
}

TEST_CASE("validate clean and violating models") {
  Doc ok, bad;
  char* report = nullptr;
  REQUIRE(bt_doc_parse(kCoin, &ok.d, nullptr) == BT_OK);
  CHECK(bt_validate(ok.d, nullptr, &report) == BT_OK);
  CHECK(Json::parse(take(report))["ok"] == true);

  REQUIRE(bt_doc_parse(kSwapped, &bad.d, nullptr) == BT_OK);
  CHECK(bt_validate(bad.d, nullptr, &report) == BT_VIOLATION);
  Json j = Json::parse(take(report));
  CHECK(j["ok"] == false);
  CHECK(j["violations"][0]["condition"] == "introspection");
  CHECK(j["violations"][0]["witness"]["outer_measure"] == "0/1");
}

TEST_CASE("eval returns the truth set") {
  Doc doc;
  char* report = nullptr;
  REQUIRE(bt_doc_parse(kCoin, &doc.d, nullptr) == BT_OK);
  REQUIRE(bt_eval(doc.d, nullptr, "B{1,1/2} p", &report) == BT_OK);
  Json j = Json::parse(take(report));
  CHECK(j["points"] == Json::array({"u", "v"}));
  CHECK(j["valid"] == true);

  REQUIRE(bt_eval(doc.d, nullptr, "p & !p", &report) == BT_OK);
  CHECK(Json::parse(take(report))["points"] == Json::array());

  CHECK(bt_eval(doc.d, nullptr, "nosuch", &report) == BT_INPUT_ERROR);
  CHECK(Json::parse(take(report))["error"]["kind"] == "UnknownAtom");
}

TEST_CASE("describe reports the partitions") {
  Doc doc;
  char* report = nullptr;
  REQUIRE(bt_doc_parse(kCoin, &doc.d, nullptr) == BT_OK);
  REQUIRE(bt_describe(doc.d, nullptr, &report) == BT_OK);
  Json j = Json::parse(take(report));
  CHECK(j["zero"].size() == 2);
  CHECK(j["full"].size() == 2);
  CHECK(j["agent"][0].size() == 1);  // constant beliefs: one class
}

TEST_CASE("translate both directions and refusal") {
  Doc doc;
  char* report = nullptr;
  REQUIRE(bt_doc_parse(kCoin, &doc.d, nullptr) == BT_OK);

  bt_doc* out = nullptr;
  REQUIRE(bt_translate(doc.d, "m2t", nullptr, &out, &report) == BT_OK);
  Doc ts;
  ts.d = out;
  Json j = Json::parse(take(report));
  CHECK(j["state_of_world"].size() == 2);
  CHECK(std::string(bt_doc_kind(ts.d)) == "typespace");

  bt_doc* back = nullptr;
  REQUIRE(bt_translate(ts.d, "t2m", nullptr, &back, nullptr) == BT_OK);
  Doc m2;
  m2.d = back;
  CHECK(std::string(bt_doc_kind(m2.d)) == "model");

  CHECK(bt_translate(doc.d, "sideways", nullptr, &out, &report) == BT_INPUT_ERROR);
  take(report);

  // underdetermined under theta = {1/2}: refusal with both candidates
  const char* ambiguous = R"({
    "kind": "model", "agents": 1,
    "worlds": {"points": ["u1","u2","u3","v1","v2","v3"],
               "atoms": [["u1"],["u2"],["u3"],["v1"],["v2"],["v3"]]},
    "beliefs": [{
      "u1": {"u1":"3/5","u2":"1/5","u3":"1/5"},
      "u2": {"u1":"3/5","u2":"1/5","u3":"1/5"},
      "u3": {"u1":"3/5","u2":"1/5","u3":"1/5"},
      "v1": {"v1":"7/10","v2":"1/5","v3":"1/10"},
      "v2": {"v1":"7/10","v2":"1/5","v3":"1/10"},
      "v3": {"v1":"7/10","v2":"1/5","v3":"1/10"}
    }],
    "vocab": ["p","q"],
    "interp": {"p": ["u1","v1"], "q": ["u2","v2"]}
  })";
  Doc amb;
  REQUIRE(bt_doc_parse(ambiguous, &amb.d, nullptr) == BT_OK);
  CHECK(bt_translate(amb.d, "m2t", "1/2", &out, &report) == BT_REFUSAL);
  Json r = Json::parse(take(report));
  CHECK(r["error"]["kind"] == "NonUniqueBeliefExtension");
  CHECK(r["candidates"].size() == 2);
}

TEST_CASE("witness merge and universal constructions") {
  Doc doc;
  char* report = nullptr;
  REQUIRE(bt_doc_parse(kCoin, &doc.d, nullptr) == BT_OK);

  const char* targets[] = {"u", "v"};
  bt_doc* merged = nullptr;
  REQUIRE(bt_witness_merge(doc.d, targets, 2, &merged, &report) == BT_OK);
  Doc md;
  md.d = merged;
  CHECK(Json::parse(take(report))["star"] == "*");
  CHECK(bt_validate(md.d, nullptr, &report) == BT_OK);
  take(report);

  const bt_doc* members[] = {doc.d, doc.d};
  bt_doc* uni = nullptr;
  REQUIRE(bt_universal_model(members, 2, &uni, &report) == BT_OK);
  Doc ud;
  ud.d = uni;
  Json maps = Json::parse(take(report));
  CHECK(maps["description_maps"].size() == 2);
  char* out = nullptr;
  REQUIRE(bt_doc_to_json(ud.d, &out) == BT_OK);
  CHECK(Json::parse(take(out))["worlds"]["points"].size() == 2);
}

TEST_CASE("universal typespace and morphism check") {
  const char* ts_text = R"({
    "kind": "typespace", "agents": 1,
    "states": {"points": ["x1","x2"], "atoms": [["x1"],["x2"]]},
    "types": [{"points": ["t"], "atoms": [["t"]]}],
    "beliefs": [{"t": {"x1,t": "1/2", "x2,t": "1/2"}}]
  })";
  Doc ts;
  char* report = nullptr;
  REQUIRE(bt_doc_parse(ts_text, &ts.d, nullptr) == BT_OK);
  const bt_doc* members[] = {ts.d};
  bt_doc* star = nullptr;
  REQUIRE(bt_universal_typespace(members, 1, nullptr, 1000, &star, &report) == BT_OK);
  Doc sd;
  sd.d = star;
  Json j = Json::parse(take(report));
  CHECK(j["certificates"][0]["certified"] == true);
  CHECK(j["certificates"][0]["morphism_count"] == 1);
  Json mj = j["morphisms"][0];

  // feed the returned morphism back through the checker
  Doc morph;
  REQUIRE(bt_doc_parse(mj.dump().c_str(), &morph.d, nullptr) == BT_OK);
  CHECK(bt_morphism_check(ts.d, sd.d, morph.d, &report) == BT_OK);
  take(report);

  // a wrong identity-shaped morphism against a shifted space fails
  const char* ts2_text = R"({
    "kind": "typespace", "agents": 1,
    "states": {"points": ["x1","x2"], "atoms": [["x1"],["x2"]]},
    "types": [{"points": ["t"], "atoms": [["t"]]}],
    "beliefs": [{"t": {"x1,t": "1"}}]
  })";
  Doc ts2;
  REQUIRE(bt_doc_parse(ts2_text, &ts2.d, nullptr) == BT_OK);
  Doc ident;
  REQUIRE(bt_doc_parse(R"({"kind":"morphism","maps":[{"t":"t"}]})", &ident.d,
                       nullptr) == BT_OK);
  CHECK(bt_morphism_check(ts.d, ts2.d, ident.d, &report) == BT_VIOLATION);
  Json rv = Json::parse(take(report));
  CHECK(rv["violations"][0]["condition"] == "morphism_belief");
}
