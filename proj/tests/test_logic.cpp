#include "doctest.h"

#include "belief/logic.hpp"

using namespace belt;

namespace {

const std::vector<std::string> kVocab{"p", "q"};
const ThresholdSet kDense = ThresholdSet::dense_rationals();

Formula parse(const std::string& s, int agents = 2,
              const ThresholdSet& ths = kDense) {
  return parse_formula(s, kVocab, agents, ths);
}

}  // namespace

TEST_CASE("threshold sets") {
  ThresholdSet ths = ThresholdSet::parse("1/2,0,1,1/2");
  CHECK_FALSE(ths.dense);
  CHECK(ths.values == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
  CHECK(ths.contains(Rat(1, 2)));
  CHECK_FALSE(ths.contains(Rat(1, 3)));
  CHECK_FALSE(ths.missing_one());
  CHECK(ThresholdSet::parse("1/4").missing_one());
  CHECK(ThresholdSet::parse("dense").dense);
  CHECK(kDense.contains(Rat(17, 19)));
  CHECK(ths.to_string() == "0,1/2,1");
  CHECK_THROWS_AS(ThresholdSet::parse("3/2"), Error);
}

TEST_CASE("parsing the base productions") {
  Formula f = parse("B{1,1/2} p");
  CHECK(f.kind() == Conn::Believes);
  CHECK(f.agent() == 1);
  CHECK(f.theta() == Rat(1, 2));
  CHECK(f.child().kind() == Conn::Atom);
  CHECK(f.child().atom_name() == "p");

  CHECK(parse("p & q").kind() == Conn::And);
  CHECK(parse("!p").kind() == Conn::Not);
  CHECK(parse("(p)") == parse("p"));
}

TEST_CASE("derived connectives expand") {
  CHECK(parse("p -> B{1,1} !q") ==
        Formula::lnot(Formula::land(
            Formula::atom("p"),
            Formula::lnot(Formula::believes(1, Rat(1), Formula::lnot(Formula::atom("q")))))));
  CHECK(parse("p | q") == Formula::lnot(Formula::land(Formula::lnot(Formula::atom("p")),
                                                      Formula::lnot(Formula::atom("q")))));
  CHECK(parse("p <-> q") ==
        Formula::land(Formula::implies(Formula::atom("p"), Formula::atom("q")),
                      Formula::implies(Formula::atom("q"), Formula::atom("p"))));
}

TEST_CASE("decimal thresholds are exact") {
  Formula f = parse("B{2,0.25} q");
  CHECK(f.theta() == Rat(1, 4));
  CHECK(parse("B{1,0.5} p") == parse("B{1,1/2} p"));
}

TEST_CASE("parse failures carry the right kind") {
  auto kind_of = [](const std::string& s, int agents = 2,
                    const ThresholdSet& ths = kDense) {
    try {
      parse(s, agents, ths);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrKind::Io;  // sentinel: no throw
  };
  CHECK(kind_of("p &") == ErrKind::Syntax);
  CHECK(kind_of("") == ErrKind::Syntax);
  CHECK(kind_of("p q") == ErrKind::Syntax);
  CHECK(kind_of("r") == ErrKind::UnknownAtom);
  CHECK(kind_of("B{3,1/2} p") == ErrKind::AgentOutOfRange);
  CHECK(kind_of("B{0,1/2} p") == ErrKind::AgentOutOfRange);
  CHECK(kind_of("B{1,3/2} p") == ErrKind::ThresholdOutOfRange);
  CHECK(kind_of("B{1,1/3} p", 2, ThresholdSet::parse("0,1/2,1")) ==
        ErrKind::ThresholdNotInSet);
}

TEST_CASE("a bare B identifier is an atom") {
  std::vector<std::string> vocab{"Bp"};
  Formula f = parse_formula("Bp", vocab, 1, kDense);
  CHECK(f.kind() == Conn::Atom);
  CHECK(f.atom_name() == "Bp");
}

TEST_CASE("render round trips and canonical forms") {
  CHECK(Formula::atom("p").render() == "p");
  CHECK(Formula::believes(2, Rat(3, 4), Formula::lnot(Formula::atom("p"))).render() ==
        "B{2,3/4} !p");
  for (const char* s : {"p", "!p", "p & q", "B{1,1/2} p", "B{2,1} (p & !q)",
                        "p -> q", "p | !q", "p <-> B{1,0} q",
                        "B{1,1} B{2,1/2} p"}) {
    Formula f = parse(s);
    CHECK(parse(f.render()) == f);
  }
  // nested And stays fully parenthesized
  CHECK(parse("p & q & p").render() == "((p & q) & p)");
}

TEST_CASE("modal depth and size") {
  CHECK(parse("p & q").modal_depth() == 0);
  CHECK(parse("B{1,1/2} p").modal_depth() == 1);
  CHECK(parse("B{1,1} B{2,1/2} p").modal_depth() == 2);
  CHECK(parse("p").size() == 1);
  CHECK(parse("!p").size() == 2);
  CHECK(parse("p & q").size() == 3);
  CHECK(parse("B{1,1/2} p").size() == 2);
}

TEST_CASE("purely propositional and i-formulas") {
  CHECK(parse("p & !q").purely_propositional());
  CHECK_FALSE(parse("B{1,1} p").purely_propositional());
  CHECK_FALSE(parse("p & B{1,1} p").purely_propositional());

  CHECK(parse("B{1,1/2} p & !B{1,1} q").is_i_formula(1));
  CHECK_FALSE(parse("p").is_i_formula(1));
  CHECK_FALSE(parse("B{2,1} p").is_i_formula(1));
  CHECK(parse("B{1,1} B{2,1/2} p").is_i_formula(1));
  CHECK_FALSE(parse("p & B{1,1} q").is_i_formula(1));
}

TEST_CASE("structural equality and hashing") {
  CHECK(parse("p & q") == parse("p & q"));
  CHECK_FALSE(parse("p & q") == parse("q & p"));
  CHECK(parse("p & q").hash() == parse("p & q").hash());
  CHECK(parse("B{1,1/2} p").hash() != parse("B{1,1} p").hash());
}

TEST_CASE("enumeration basics") {
  ThresholdSet ths = ThresholdSet::parse("1/2");
  auto atoms_only = enumerate_formulas({"p", "q"}, 1, ths, 0, 1, 100);
  REQUIRE(atoms_only.size() == 2);
  CHECK(atoms_only[0] == Formula::atom("p"));
  CHECK(atoms_only[1] == Formula::atom("q"));

  CHECK(enumerate_formulas({}, 1, ths, 0, 5, 100).empty());

  auto fs = enumerate_formulas({"p"}, 1, ths, 0, 2, 100);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == Formula::atom("p"));
  CHECK(fs[1] == Formula::lnot(Formula::atom("p")));
}

TEST_CASE("enumeration is exhaustive and duplicate free") {
  ThresholdSet ths = ThresholdSet::parse("0,1");
  auto fs = enumerate_formulas({"p"}, 1, ths, 1, 4, 100000);
  for (std::size_t a = 0; a < fs.size(); ++a) {
    CHECK(fs[a].size() <= 4);
    CHECK(fs[a].modal_depth() <= 1);
    for (std::size_t b = a + 1; b < fs.size(); ++b) CHECK_FALSE(fs[a] == fs[b]);
  }
  // ascending size, deterministic
  for (std::size_t a = 1; a < fs.size(); ++a) CHECK(fs[a - 1].size() <= fs[a].size());
  auto again = enumerate_formulas({"p"}, 1, ths, 1, 4, 100000);
  REQUIRE(again.size() == fs.size());
  for (std::size_t a = 0; a < fs.size(); ++a) CHECK(again[a] == fs[a]);
  // depth bound respected: no B at depth limit
  auto depth0 = enumerate_formulas({"p"}, 1, ths, 0, 4, 100000);
  for (const Formula& f : depth0) CHECK(f.modal_depth() == 0);
}

TEST_CASE("enumeration budget and dense refusal") {
  ThresholdSet ths = ThresholdSet::parse("0,1/2,1");
  CHECK_THROWS_AS(enumerate_formulas({"p", "q"}, 2, ths, 3, 9, 50), Error);
  try {
    enumerate_formulas({"p"}, 1, kDense, 1, 3, 100);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::NonDenseThresholds);
  }
}
