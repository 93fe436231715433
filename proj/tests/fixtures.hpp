#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/dynamics.hpp"
#include "core/model.hpp"
#include "core/rng.hpp"

namespace fixtures {

using fosor::FeatureSpace;
using fosor::RuleBuilder;
using fosor::SocialRule;

// Worked example on m = (2,2,2): three binary features, eight outcomes
// indexed by v1*4 + v2*2 + v3. Eighteen arcs are pinned; the ten
// remaining pairs are arbitrary and selected by a 10-bit mask (bit set:
// the higher index wins). Mask 0 is the canonical completion.
inline const std::vector<std::pair<int, int>>& seven_pinned_arcs() {
  static const std::vector<std::pair<int, int>> arcs = {
      // 000 beats 100, 010, 001, 101, 011
      {0, 4}, {0, 2}, {0, 1}, {0, 5}, {0, 3},
      // 110 beats 000, 100, 010, 101, 011
      {6, 0}, {6, 4}, {6, 2}, {6, 5}, {6, 3},
      // 101 beats 100, 001, 111
      {5, 4}, {5, 1}, {5, 7},
      // 011 beats 010, 001, 101, 111
      {3, 2}, {3, 1}, {3, 5}, {3, 7},
      // 111 beats 110
      {7, 6},
  };
  return arcs;
}

inline const std::vector<std::pair<int, int>>& seven_open_pairs() {
  static const std::vector<std::pair<int, int>> pairs = {
      {0, 7}, {1, 2}, {1, 4}, {1, 6}, {1, 7},
      {2, 4}, {2, 5}, {2, 7}, {3, 4}, {4, 7},
  };
  return pairs;
}

inline SocialRule seven_rule(uint32_t completion_mask = 0) {
  auto space = FeatureSpace::create({2, 2, 2});
  RuleBuilder builder(space);
  for (auto [w, l] : seven_pinned_arcs()) builder.prefer(w, l);
  const auto& open = seven_open_pairs();
  for (size_t i = 0; i < open.size(); ++i) {
    auto [lo, hi] = open[i];
    ((completion_mask >> i) & 1u) ? builder.prefer(hi, lo) : builder.prefer(lo, hi);
  }
  return std::move(builder).build();
}

// The distinguished outcomes of the worked example.
inline constexpr int kSevenGlobal = 3;  // 011
inline constexpr int kSevenULocal = 0;  // 000
inline constexpr int kSevenLocal = 5;   // 101

// 32 completions used by the golden tests: the canonical one plus
// seeded random masks over the ten open pairs.
inline std::vector<uint32_t> seven_completions() {
  std::vector<uint32_t> masks = {0};
  for (uint64_t i = 0; masks.size() < 32; ++i) {
    auto stream = fosor::RngStream::for_repetition(2026, i);
    masks.push_back(static_cast<uint32_t>(stream.next() & 0x3FFu));
  }
  return masks;
}

// Five-node tournament with scores (0, 2, 2, 2, 4): node 4 dominant,
// nodes 1-2-3 a 3-cycle above node 0.
inline SocialRule five_node_rule() {
  auto space = FeatureSpace::create({5});
  RuleBuilder builder(space);
  for (int x = 0; x < 4; ++x) builder.prefer(4, x);
  builder.prefer(1, 2);
  builder.prefer(2, 3);
  builder.prefer(3, 1);
  for (int x = 1; x < 4; ++x) builder.prefer(x, 0);
  return std::move(builder).build();
}

// One-feature 3-cycle: 0 beats 1 beats 2 beats 0.
inline SocialRule cycle3_rule() {
  auto space = FeatureSpace::create({3});
  RuleBuilder builder(space);
  builder.prefer(0, 1);
  builder.prefer(1, 2);
  builder.prefer(2, 0);
  return std::move(builder).build();
}

// Two binary features; 11 dominant, 00 beating both its neighbors, so
// 00 is a local optimum for the singleton scheme while only 11 is in
// the maximum component.
inline SocialRule two_by_two_rule() {
  auto space = FeatureSpace::create({2, 2});
  RuleBuilder builder(space);
  builder.prefer(3, 2);
  builder.prefer(3, 1);
  builder.prefer(3, 0);
  builder.prefer(0, 2);
  builder.prefer(0, 1);
  builder.prefer(2, 1);
  return std::move(builder).build();
}

inline SocialRule transitive_rule(const FeatureSpace& space) {
  RuleBuilder builder(space);
  int m = space.outcome_count();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) builder.prefer(i, j);
  return std::move(builder).build();
}

// All 2^C(M,2) rules on the space, enumerated by orientation mask.
inline SocialRule rule_from_mask(const FeatureSpace& space, uint64_t mask) {
  RuleBuilder builder(space);
  int m = space.outcome_count();
  int bit = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j, ++bit)
      ((mask >> bit) & 1u) ? builder.prefer(j, i) : builder.prefer(i, j);
  return std::move(builder).build();
}

inline SocialRule random_rule(const FeatureSpace& space, uint64_t seed, uint64_t index) {
  auto stream = fosor::RngStream::for_repetition(seed, index);
  fosor::CoinSource coins(stream);
  RuleBuilder builder(space);
  int m = space.outcome_count();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      coins.flip() ? builder.prefer(i, j) : builder.prefer(j, i);
  return std::move(builder).build();
}

}  // namespace fixtures
