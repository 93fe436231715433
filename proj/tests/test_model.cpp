#include <doctest.h>

#include <array>

#include "core/model.hpp"
#include "fixtures.hpp"

using namespace fosor;

TEST_CASE("feature space encodes mixed-radix with the first feature most significant") {
  auto space = FeatureSpace::create({2, 3, 2});
  CHECK(space.outcome_count() == 12);
  CHECK(space.sigma() == 7);
  CHECK(space.feature_count() == 3);
  CHECK(space.encode(std::array{0, 0, 0}) == 0);
  CHECK(space.encode(std::array{0, 0, 1}) == 1);
  CHECK(space.encode(std::array{0, 1, 0}) == 2);
  CHECK(space.encode(std::array{1, 0, 0}) == 6);
  CHECK(space.encode(std::array{1, 2, 1}) == 11);
  for (int x = 0; x < space.outcome_count(); ++x)
    CHECK(space.encode(space.decode(x)) == x);
}

TEST_CASE("feature space rejects invalid shapes and tuples") {
  CHECK_THROWS_AS(FeatureSpace::create({}), DomainError);
  CHECK_THROWS_AS(FeatureSpace::create({2, 1}), DomainError);
  auto space = FeatureSpace::create({2, 2});
  CHECK_THROWS_AS(space.encode(std::array{0, 2}), DomainError);
  CHECK_THROWS_AS(space.encode(std::array{-1, 0}), DomainError);
  CHECK_THROWS_AS(space.encode(std::array{0}), DomainError);
  CHECK_THROWS_AS(outcome_at(space, 4), DomainError);
  CHECK_THROWS_AS(outcome_at(space, -1), DomainError);
}

TEST_CASE("feature objects use 1-based indices externally") {
  auto space = FeatureSpace::create({2, 2, 2});
  auto obj = FeatureObject::from_indices(space, {1, 3});
  CHECK(obj.mask() == 0b101u);
  CHECK(obj.contains(0));
  CHECK(!obj.contains(1));
  CHECK(obj.indices_one_based() == std::vector<int>{1, 3});
  CHECK_THROWS_AS(FeatureObject::from_indices(space, {0}), DomainError);
  CHECK_THROWS_AS(FeatureObject::from_indices(space, {4}), DomainError);
  CHECK_THROWS_AS(FeatureObject::from_indices(space, {}), DomainError);
}

TEST_CASE("schemes must cover every feature") {
  auto space = FeatureSpace::create({2, 2, 2});
  CHECK_NOTHROW(parse_scheme_spec(space, "1-2,3"));
  CHECK_THROWS_AS(parse_scheme_spec(space, "1-2"), DomainError);
  CHECK_THROWS_AS(parse_scheme_spec(space, ""), DomainError);
  auto scheme = parse_scheme_spec(space, "2-3,1,3");
  CHECK(scheme.size() == 3);
  CHECK(format_scheme_spec(scheme) == "2-3,1,3");
}

TEST_CASE("agendas cover every object and use 1-based positions") {
  auto space = FeatureSpace::create({2, 2, 2});
  auto scheme = parse_scheme_spec(space, "1-2,3");
  auto agenda = parse_agenda_spec(scheme, "1,2,1");
  CHECK(agenda.order() == std::vector<int>{0, 1, 0});
  CHECK_THROWS_AS(parse_agenda_spec(scheme, "1,1"), DomainError);
  CHECK_THROWS_AS(parse_agenda_spec(scheme, "1,2,3"), DomainError);
  CHECK_THROWS_AS(parse_agenda_spec(scheme, "0,1"), DomainError);
}

TEST_CASE("outcome specs are comma-separated value tuples") {
  auto space = FeatureSpace::create({2, 2, 2});
  CHECK(parse_outcome_spec(space, "1,1,0").index == 6);
  CHECK(parse_outcome_spec(space, "0,0,0").index == 0);
  CHECK_THROWS_AS(parse_outcome_spec(space, "1,1"), DomainError);
  CHECK_THROWS_AS(parse_outcome_spec(space, "2,0,0"), DomainError);
  CHECK_THROWS_AS(parse_outcome_spec(space, "a,0,0"), DomainError);
}

TEST_CASE("rule builder enforces antisymmetry and completeness") {
  auto space = FeatureSpace::create({2, 2});
  RuleBuilder builder(space);
  builder.prefer(0, 1);
  CHECK(builder.oriented(0, 1));
  CHECK(builder.oriented(1, 0));
  CHECK(!builder.oriented(2, 3));
  CHECK_THROWS_AS(builder.prefer(1, 0), DomainError);
  CHECK_THROWS_AS(builder.prefer(2, 2), DomainError);
  CHECK_THROWS_AS(std::move(builder).build(), DomainError);  // incomplete
}

TEST_CASE("rule files round-trip through parse and serialize") {
  auto rule = fixtures::seven_rule(0);
  auto text = serialize_rule(rule);
  auto again = parse_rule(text);
  CHECK(again == rule);
  CHECK(serialize_rule(again) == text);
}

TEST_CASE("rule parser skips comments and blank lines") {
  auto text = serialize_rule(fixtures::two_by_two_rule());
  auto padded = "# a comment\n\n" + text + "\n# trailing\n";
  CHECK(parse_rule(padded) == fixtures::two_by_two_rule());
}

TEST_CASE("rule parser rejects malformed input") {
  CHECK_THROWS_AS(parse_rule(""), DomainError);
  CHECK_THROWS_AS(parse_rule("features: 2 2\n-111\n0-10\n00-0\n"), DomainError);
  CHECK_THROWS_AS(parse_rule("features: 2 2\n-111\n0-10\n00-0\n0110\n"), DomainError);
  // both (0,1) entries claim dominance
  CHECK_THROWS_AS(parse_rule("features: 2 2\n-111\n1-10\n00-0\n011-\n"), DomainError);
  // neither claims it
  CHECK_THROWS_AS(parse_rule("features: 2 2\n-011\n0-10\n00-0\n011-\n"), DomainError);
  CHECK_THROWS_AS(parse_rule("features: 2\nxy\n"), DomainError);
  CHECK_THROWS_AS(parse_rule("m = 2 2\n-1\n0-\n"), DomainError);
}

TEST_CASE("scores count dominated outcomes") {
  auto rule = fixtures::five_node_rule();
  CHECK(rule.score(4) == 4);
  CHECK(rule.score(0) == 0);
  CHECK(rule.score(1) == 2);
}
