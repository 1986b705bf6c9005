#include "doctest.h"

#include "belief/typespaces.hpp"
#include "support/generators.hpp"

using namespace belt;

namespace {

const ThresholdSet kDense = ThresholdSet::dense_rationals();

// X={x1,x2}, T_1={s}, T_2={t}; beta_1(s) uniform over {(x1,s,t),(x2,s,t)},
// beta_2(t) = point mass at (x1,s,t).
TypeSpace example_space() {
  SpacePtr states = make_discrete_space({"x1", "x2"});
  SpacePtr t1 = make_discrete_space({"s"});
  SpacePtr t2 = make_discrete_space({"t"});
  ProductSpace prod = product({states, t1, t2});
  Measure b1 = Measure::uniform(prod.space);
  Measure b2 = Measure::point_mass(prod.space, prod.space->index_of("x1,s,t"));
  return make_typespace(states, {t1, t2}, {{b1}, {b2}});
}

InterpretedTypeSpace example_interpreted() {
  InterpretedTypeSpace its;
  its.space = example_space();
  its.vocab = {"x1", "x2"};
  its.interp = {event_from_points(its.space.states, {"x1"}),
                event_from_points(its.space.states, {"x2"})};
  return its;
}

}  // namespace

TEST_CASE("example space validates") {
  TypeSpace ts = example_space();
  CHECK(validate_typespace(ts, kDense).ok());
  CHECK(ts.agents() == 2);
  CHECK(ts.prod.space->size() == 2);
}

TEST_CASE("one state one type space validates with the only possible beta") {
  SpacePtr x = make_discrete_space({"x"});
  SpacePtr t = make_discrete_space({"t"});
  ProductSpace prod = product({x, t});
  TypeSpace ts = make_typespace(x, {t}, {{Measure::point_mass(prod.space, 0)}});
  CHECK(validate_typespace(ts, kDense).ok());
}

TEST_CASE("foreign marginal weight is a violation with witness") {
  SpacePtr x = make_discrete_space({"x"});
  SpacePtr t = make_discrete_space({"t0", "t1"});
  ProductSpace prod = product({x, t});
  // beta(t0) puts 1/2 on the t1 cylinder
  Measure bad = Measure::from_atom_weights(prod.space, {Rat(1, 2), Rat(1, 2)});
  Measure good = Measure::point_mass(prod.space, prod.space->index_of("x,t1"));
  TypeSpace ts = make_typespace(x, {t}, {{bad, good}});
  ValidationReport r = validate_typespace(ts, kDense);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().condition == "marginal");
  CHECK(r.violations.front().witness.at("type") == "t0");
}

TEST_CASE("truth sets on the example space") {
  InterpretedTypeSpace its = example_interpreted();
  auto parse = [&](const std::string& s) {
    return parse_formula(s, its.vocab, its.space.agents(), kDense);
  };
  CHECK(truth_set_ts(its, parse("x1")).point_names() ==
        std::vector<std::string>{"x1,s,t"});
  CHECK(truth_set_ts(its, parse("B{2,1} x1")).full());
  CHECK(truth_set_ts(its, parse("B{1,1/2} x1")).full());
  CHECK(truth_set_ts(its, parse("B{1,3/4} x1")).empty());
  CHECK(satisfies_ts(its, 0, parse("x1")));
  CHECK_FALSE(satisfies_ts(its, 1, parse("x1")));
}

TEST_CASE("truth_set_ts distributes over boolean structure") {
  gen::Rng rng(23);
  for (int k = 0; k < 15; ++k) {
    InterpretedTypeSpace its = gen::random_interpreted(rng);
    REQUIRE(validate_interpreted(its, kDense).ok());
    std::vector<Rat> thetas{Rat(0), Rat(1, 2), Rat(1)};
    for (int j = 0; j < 8; ++j) {
      Formula f = gen::random_formula(rng, its.vocab, its.space.agents(), thetas, 2, 5);
      Formula g = gen::random_formula(rng, its.vocab, its.space.agents(), thetas, 2, 5);
      CHECK(truth_set_ts(its, Formula::lnot(f)) == truth_set_ts(its, f).complement());
      CHECK(truth_set_ts(its, Formula::land(f, g)) ==
            truth_set_ts(its, f).intersect(truth_set_ts(its, g)));
    }
  }
}

TEST_CASE("identity morphism verifies and composes") {
  TypeSpace ts = example_space();
  TypeMorphism id = identity_morphism(ts);
  CHECK(id.is_identity());
  CHECK(id.is_bijective());
  CHECK(check_type_morphism(ts, ts, id).ok());
  CHECK(compose(id, id).is_identity());
}

TEST_CASE("collapsing duplicate types verifies, distinct beliefs do not") {
  SpacePtr x = make_discrete_space({"x"});
  SpacePtr t2 = make_discrete_space({"a", "b"});
  ProductSpace prod2 = product({x, t2});
  auto delta = [&](const std::string& name) {
    return Measure::point_mass(prod2.space, prod2.space->index_of(name));
  };
  TypeSpace src = make_typespace(x, {t2}, {{delta("x,a"), delta("x,b")}});

  SpacePtr t1 = make_discrete_space({"c"});
  ProductSpace prod1 = product({x, t1});
  TypeSpace dst = make_typespace(x, {t1}, {{Measure::point_mass(prod1.space, 0)}});

  // both types of src collapse onto the single type of dst, and the
  // pushforward of either delta is the delta at (x,c)
  TypeMorphism m{{{0, 0}}};
  CHECK(check_type_morphism(src, dst, m).ok());

  // beliefs that disagree about X cannot collapse: on a two state space,
  // the pushforward of src2's second belief lands on the wrong state
  SpacePtr x2 = make_discrete_space({"x1", "x2"});
  ProductSpace p2 = product({x2, t2});
  ProductSpace p1 = product({x2, t1});
  auto d2 = [&](const std::string& name) {
    return Measure::point_mass(p2.space, p2.space->index_of(name));
  };
  TypeSpace src2 = make_typespace(x2, {t2}, {{d2("x1,a"), d2("x2,b")}});
  TypeSpace dst2 = make_typespace(
      x2, {t1}, {{Measure::point_mass(p1.space, p1.space->index_of("x1,c"))}});
  TypeMorphism bad{{{0, 0}}};
  ValidationReport r = check_type_morphism(src2, dst2, bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().condition == "morphism_belief");
}

TEST_CASE("state space mismatch throws") {
  TypeSpace a = example_space();
  SpacePtr x = make_discrete_space({"x"});
  SpacePtr t = make_discrete_space({"t"});
  TypeSpace b = make_typespace(x, {t, t},
                               {{Measure::point_mass(product({x, t, t}).space, 0)},
                                {Measure::point_mass(product({x, t, t}).space, 0)}});
  try {
    check_type_morphism(a, b, identity_morphism(a));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::StateSpaceMismatch);
  }
}

TEST_CASE("find_type_morphisms basics") {
  TypeSpace ts = example_space();
  auto ms = find_type_morphisms(ts, ts, 1000);
  REQUIRE(ms.size() == 1);
  CHECK(ms.front().is_identity());
  CHECK(morphism_search_space(ts, ts) == 1);

  // src with duplicate types, dst its collapse: exactly one morphism
  SpacePtr x = make_discrete_space({"x"});
  SpacePtr t2 = make_discrete_space({"a", "b"});
  ProductSpace prod2 = product({x, t2});
  Measure uni = Measure::uniform(prod2.space);
  TypeSpace dup = make_typespace(x, {t2}, {{uni, uni}});
  SpacePtr t1 = make_discrete_space({"c"});
  TypeSpace coll = make_typespace(x, {t1}, {{Measure::point_mass(product({x, t1}).space, 0)}});
  auto ms2 = find_type_morphisms(dup, coll, 1000);
  CHECK(ms2.size() == 1);

  // dst missing a realized belief: beliefs that disagree about a two
  // state X cannot both map onto the single collapse type
  SpacePtr x2 = make_discrete_space({"x1", "x2"});
  ProductSpace p2 = product({x2, t2});
  ProductSpace p1 = product({x2, t1});
  auto d2 = [&](const std::string& name) {
    return Measure::point_mass(p2.space, p2.space->index_of(name));
  };
  TypeSpace distinct = make_typespace(x2, {t2}, {{d2("x1,a"), d2("x2,b")}});
  TypeSpace coll2 = make_typespace(
      x2, {t1}, {{Measure::point_mass(p1.space, p1.space->index_of("x1,c"))}});
  CHECK(find_type_morphisms(distinct, coll2, 1000).empty());

  CHECK_THROWS_AS(find_type_morphisms(dup, dup, 1), Error);
}

TEST_CASE("morphism truth preservation on verified morphisms") {
  gen::Rng rng(31);
  for (int k = 0; k < 10; ++k) {
    gen::TypeSpaceParams p;
    p.belief_pool = 2;
    p.max_types = 2;
    InterpretedTypeSpace its = gen::random_interpreted(rng, p);
    auto ms = find_type_morphisms(its.space, its.space, 100000);
    std::vector<Rat> thetas{Rat(0), Rat(1, 2), Rat(1)};
    for (const TypeMorphism& m : ms) {
      REQUIRE(check_type_morphism(its.space, its.space, m).ok());
      for (int j = 0; j < 5; ++j) {
        Formula f = gen::random_formula(rng, its.vocab, its.space.agents(), thetas, 3, 6);
        Event e = truth_set_ts(its, f);
        for (std::size_t pt = 0; pt < its.space.prod.space->size(); ++pt) {
          auto tuple = its.space.prod.tuple_of(pt);
          for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
            tuple[i + 1] = m.maps[i][tuple[i + 1]];
          std::size_t image = its.space.prod.point_index(tuple);
          CHECK(e.contains_point(pt) == e.contains_point(image));
        }
      }
    }
  }
}

TEST_CASE("memoizing ts evaluator matches plain recursion") {
  gen::Rng rng(37);
  InterpretedTypeSpace its = gen::random_interpreted(rng);
  TsEvaluator ev(its);
  std::vector<Rat> thetas{Rat(0), Rat(1, 4), Rat(1)};
  for (int j = 0; j < 40; ++j) {
    Formula f = gen::random_formula(rng, its.vocab, its.space.agents(), thetas, 3, 8);
    CHECK(ev.truth_set(f) == truth_set_ts(its, f));
  }
}
