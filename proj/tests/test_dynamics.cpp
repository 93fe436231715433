#include <doctest.h>

#include <algorithm>

#include "core/dynamics.hpp"
#include "core/enumeration.hpp"
#include "core/tournament.hpp"
#include "core/ubasin.hpp"
#include "fixtures.hpp"

using namespace fosor;

namespace {

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST_CASE("separation structure") {
  auto space = FeatureSpace::create({2, 2, 2});
  CHECK(separating_features(space, 0, 5) == 0b101u);  // 000 vs 101
  CHECK(separating_features(space, 3, 3) == 0u);
  CHECK(separating_features(space, 6, 3) == 0b101u);  // 110 vs 011
  CHECK(prominent_distance(space, 0, 4) == 1);
  CHECK(prominent_distance(space, 0, 6) == 2);
  CHECK(prominent_distance(space, 5, 5) == 0);

  CHECK(hyperplane_distance(space, 0, 1) == 1);
  auto line = FeatureSpace::create({4});
  CHECK(hyperplane_distance(line, 0, 3) == 3);
  CHECK(hyperplane_distance(line, 2, 2) == 0);
}

TEST_CASE("preferred and best neighbors on the worked example") {
  auto rule = fixtures::seven_rule(0);
  auto obj3 = FeatureObject::from_indices(rule.space(), {3});
  CHECK(preferred_neighbors(rule, 6, obj3) == std::vector<int>{7});
  auto obj12 = FeatureObject::from_indices(rule.space(), {1, 2});
  CHECK(preferred_neighbors(rule, 0, obj12) == std::vector<int>{6});
  CHECK(best_neighbor(rule, 0, obj12) == 6);
  // a dominant outcome has no preferred neighbors for any object
  auto trans = fixtures::transitive_rule(rule.space());
  for (uint32_t mask = 1; mask < 8; ++mask)
    CHECK(preferred_neighbors(trans, 0, FeatureObject(mask)).empty());
}

TEST_CASE("best neighbor is the dominance maximum, absent on cycles") {
  // preferred set {a, b} with a beating b yields a
  auto rule = fixtures::five_node_rule();
  auto all = FeatureObject::from_indices(rule.space(), {1});
  CHECK(best_neighbor(rule, 0, all) == 4);  // 4 beats 1, 2, 3
  // outcome 4's preferred set is empty
  CHECK(!best_neighbor(rule, 4, all).has_value());
  // the 3-cycle has nonempty preferred sets but never a best neighbor
  auto cyc = fixtures::cycle3_rule();
  auto o = FeatureObject::from_indices(cyc.space(), {1});
  for (int x = 0; x < 3; ++x) {
    CHECK(preferred_neighbors(cyc, x, o).size() == 1);
    CHECK(best_neighbor(cyc, x, o).has_value());
  }
}

TEST_CASE("freeness on the worked example") {
  auto rule = fixtures::seven_rule(0);
  CHECK(is_free(rule, 0));
  CHECK(!is_free(rule, 4));  // 000 beats 100 at distance 1
  CHECK(is_free(rule, 3));
  CHECK(is_free(rule, 5));
  // sole dominant member of the top component is free
  auto space = FeatureSpace::create({2, 2});
  CHECK(is_free(fixtures::two_by_two_rule(), 3));
}

TEST_CASE("local optimum checks against the figures") {
  auto fig5 = fixtures::two_by_two_rule();
  auto singles = parse_scheme_spec(fig5.space(), "1,2");
  CHECK(is_local_optimum(fig5, 0, singles));
  CHECK(is_local_optimum(fig5, 3, singles));

  auto fig4 = fixtures::cycle3_rule();
  auto whole = parse_scheme_spec(fig4.space(), "1");
  for (int z = 0; z < 3; ++z) CHECK(!is_local_optimum(fig4, z, whole));

  // any scheme containing {1,2} breaks u's optimality
  auto rule = fixtures::seven_rule(0);
  auto with12 = parse_scheme_spec(rule.space(), "1-2,3");
  CHECK(!is_local_optimum(rule, 0, with12));
}

TEST_CASE("run_agenda reproduces the worked example run") {
  auto rule = fixtures::seven_rule(0);
  auto scheme = parse_scheme_spec(rule.space(), "1-2,3");
  auto agenda = parse_agenda_spec(scheme, "1,2");
  auto trace = run_agenda(rule, 4, scheme, agenda);
  CHECK(trace.terminal == PathTrace::Terminal::LocalOptimum);
  CHECK(trace.optimum == 3);
  // every step is a strict improvement inside one object
  for (size_t i = 0; i + 1 < trace.states.size(); ++i) {
    CHECK(rule.dominates(trace.states[i + 1], trace.states[i]));
    uint32_t sep = separating_features(rule.space(), trace.states[i], trace.states[i + 1]);
    uint32_t obj = scheme.objects()[trace.objects_used[i]].mask();
    CHECK((sep & ~obj) == 0);
  }
}

TEST_CASE("run_agenda from a local optimum makes no moves") {
  auto rule = fixtures::seven_rule(0);
  auto scheme = parse_scheme_spec(rule.space(), "2-3,1,3");
  auto agenda = parse_agenda_spec(scheme, "1,2,3");
  auto trace = run_agenda(rule, 0, scheme, agenda);
  CHECK(trace.terminal == PathTrace::Terminal::LocalOptimum);
  CHECK(trace.optimum == 0);
  CHECK(trace.states == std::vector<int>{0});
}

TEST_CASE("run_agenda detects the 3-cycle limit cycle") {
  auto rule = fixtures::cycle3_rule();
  auto scheme = parse_scheme_spec(rule.space(), "1");
  auto agenda = parse_agenda_spec(scheme, "1");
  auto trace = run_agenda(rule, 0, scheme, agenda);
  CHECK(trace.terminal == PathTrace::Terminal::LimitCycle);
  CHECK(trace.period == 3);
  auto cyc = trace.cycle_states;
  std::sort(cyc.begin(), cyc.end());
  CHECK(cyc == std::vector<int>{0, 1, 2});
}

TEST_CASE("run_agenda is deterministic and honors the step budget") {
  auto rule = fixtures::seven_rule(0);
  auto scheme = parse_scheme_spec(rule.space(), "1-2,3");
  auto agenda = parse_agenda_spec(scheme, "1,2");
  auto a = run_agenda(rule, 4, scheme, agenda);
  auto b = run_agenda(rule, 4, scheme, agenda);
  CHECK(a.states == b.states);
  CHECK(a.objects_used == b.objects_used);
  CHECK_THROWS_AS(run_agenda(rule, 4, scheme, agenda, 1), DomainError);
}

TEST_CASE("ordered basins reproduce the worked example") {
  auto rule = fixtures::seven_rule(0);
  auto s1 = parse_scheme_spec(rule.space(), "2-3,1,3");
  auto b1 = basin_for_agenda(rule, 0, s1, parse_agenda_spec(s1, "1,2,3"));
  CHECK(b1 == std::vector<int>{0, 1, 2, 3, 4, 6, 7});  // X minus l

  auto s2 = parse_scheme_spec(rule.space(), "1-3,2");
  auto b2 = basin_for_agenda(rule, 0, s2, parse_agenda_spec(s2, "1,2"));
  CHECK(contains(b2, 5));

  // not a local optimum for the scheme: empty ordered basin
  auto with12 = parse_scheme_spec(rule.space(), "1-2,3");
  CHECK(basin_for_agenda(rule, 0, with12, parse_agenda_spec(with12, "1,2")).empty());
}

TEST_CASE("scheme basin contains every ordered basin") {
  auto rule = fixtures::seven_rule(0);
  for (const char* spec : {"2-3,1,3", "1-3,2", "1,2,3"}) {
    auto scheme = parse_scheme_spec(rule.space(), spec);
    for (int z = 0; z < rule.outcome_count(); ++z) {
      auto whole = basin_for_scheme(rule, z, scheme);
      std::vector<int> order(scheme.size());
      for (int i = 0; i < scheme.size(); ++i) order[i] = i;
      do {
        auto part = basin_for_agenda(rule, z, scheme, Agenda(scheme, order));
        for (int y : part) CHECK(contains(whole, y));
        CHECK(part.empty() == whole.empty());
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

TEST_CASE("scheme basin is empty exactly for non-local-optima") {
  auto rule = fixtures::seven_rule(0);
  auto singles = parse_scheme_spec(rule.space(), "1,2,3");
  for (int z = 0; z < rule.outcome_count(); ++z)
    CHECK(basin_for_scheme(rule, z, singles).empty() ==
          !is_local_optimum(rule, z, singles));
  // a non-free outcome has an empty basin for every scheme
  CHECK(basin_for_scheme(rule, 4, singles).empty());
}

TEST_CASE("global optimum checks on the worked example") {
  auto rule = fixtures::seven_rule(0);
  auto sg = parse_scheme_spec(rule.space(), "1-2,3");
  CHECK(is_global_for_agenda(rule, 3, sg, parse_agenda_spec(sg, "1,2")));
  CHECK(is_global_for_agenda(rule, 3, sg, parse_agenda_spec(sg, "2,1")));
  CHECK(is_global_for_agenda(rule, 3, sg, parse_agenda_spec(sg, "1,2,1")));
  // u fails for the section's three-object scheme (l never arrives)
  auto s1 = parse_scheme_spec(rule.space(), "2-3,1,3");
  CHECK(!is_global_for_agenda(rule, 0, s1, parse_agenda_spec(s1, "1,2,3")));
}

TEST_CASE("bounded global verification") {
  auto rule = fixtures::seven_rule(0);
  auto sg = parse_scheme_spec(rule.space(), "1-2,3");
  CHECK_THROWS_AS(is_global_for_scheme_bounded(rule, 3, sg, 1), DomainError);
  CHECK(is_global_for_scheme_bounded(rule, 3, sg, 4) == BoundedAnswer::UnknownUpToBound);
  CHECK(is_global_for_scheme_bounded(rule, 3, sg, 16) == BoundedAnswer::Yes);

  auto s1 = parse_scheme_spec(rule.space(), "2-3,1,3");
  CHECK(is_global_for_scheme_bounded(rule, 0, s1, 6) == BoundedAnswer::No);
  auto s5 = parse_scheme_spec(rule.space(), "1-3,2-3,1,2,3");
  CHECK(is_global_for_scheme_bounded(rule, 0, s5, 5) == BoundedAnswer::No);
}

TEST_CASE("lifting outcomes") {
  auto rule = fixtures::five_node_rule();
  auto cond = irreducible_components(rule);
  auto whole = parse_scheme_spec(rule.space(), "1");
  // members of the top component are never lifting
  CHECK(!is_lifting(rule, 4, whole, cond));
  CHECK(!exists_lifting_scheme(rule, 4, cond).has_value());
  // the bottom node lifts straight to the dominant one
  CHECK(is_lifting(rule, 0, whole, cond));
  CHECK(exists_lifting_scheme(rule, 0, cond) == 4);
}

TEST_CASE("freeness equals existence of a local-optimum scheme (small spaces)") {
  // exhaust all covering schemes over n binary features
  auto verify = [](const FeatureSpace& space, uint64_t seed) {
    int n = space.feature_count();
    int objects = (1 << n) - 1;
    for (uint64_t i = 0; i < 60; ++i) {
      auto rule = fixtures::random_rule(space, seed, i);
      for (int z = 0; z < rule.outcome_count(); ++z) {
        bool any = false;
        for (uint32_t s = 1; s < (1u << objects) && !any; ++s) {
          uint32_t covered = 0;
          std::vector<FeatureObject> objs;
          for (int o = 0; o < objects; ++o)
            if ((s >> o) & 1u) {
              covered |= static_cast<uint32_t>(o + 1);
              objs.emplace_back(static_cast<uint32_t>(o + 1));
            }
          if (covered != (1u << n) - 1) continue;
          any = is_local_optimum(rule, z, ObjectsScheme(space, objs));
        }
        CHECK(any == is_free(rule, z));
      }
    }
  };
  verify(FeatureSpace::create({2}), 31);
  verify(FeatureSpace::create({2, 2}), 37);
  verify(FeatureSpace::create({2, 2, 2}), 41);
}

TEST_CASE("free outcomes have large scores") {
  auto space = FeatureSpace::create({3, 2, 2});
  int floor = min_score_local_optimum(space);
  for (uint64_t i = 0; i < 60; ++i) {
    auto rule = fixtures::random_rule(space, 43, i);
    for (int z = 0; z < rule.outcome_count(); ++z)
      if (is_free(rule, z)) CHECK(rule.score(z) >= floor);
  }
}

TEST_CASE("extremal rules attain the optima bound") {
  for (auto counts : std::vector<std::vector<int>>{
           {2, 2}, {3, 3}, {2, 2, 2}, {3, 3, 3}, {4}, {3, 2}, {2, 3}}) {
    auto space = FeatureSpace::create(counts);
    auto rule = construct_extremal_rule(space);
    int free_count = 0;
    for (int z = 0; z < rule.outcome_count(); ++z)
      if (is_free(rule, z)) ++free_count;
    CHECK(free_count == max_local_optima(space));
  }
}

TEST_CASE("single-feature extremal rule is transitive") {
  auto rule = construct_extremal_rule(FeatureSpace::create({5}));
  CHECK(is_transitive(rule));
}

TEST_CASE("move table matches best_neighbor") {
  auto rule = fixtures::seven_rule(5);
  auto scheme = parse_scheme_spec(rule.space(), "1-2,2-3,3");
  MoveTable table(rule, scheme);
  for (int o = 0; o < scheme.size(); ++o)
    for (int x = 0; x < rule.outcome_count(); ++x) {
      auto b = best_neighbor(rule, x, scheme.objects()[o]);
      CHECK(table.move(x, o) == (b ? *b : -1));
      CHECK(table.stalled(x, o) ==
            (!b && !preferred_neighbors(rule, x, scheme.objects()[o]).empty()));
    }
}
