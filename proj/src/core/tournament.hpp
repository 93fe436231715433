#pragma once

#include <vector>

#include "core/model.hpp"

namespace fosor {

// Ordered partition of the outcomes into irreducible components.
// Components are listed bottom-up: every member of components[j]
// dominates every member of components[i] whenever j > i, matching the
// convention that the last component is the maximal one.
struct Condensation {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;  // outcome -> position in components

  int max_rank() const { return static_cast<int>(components.size()) - 1; }
  const std::vector<int>& max_component() const { return components.back(); }
};

// Out-degree of every outcome.
std::vector<int> scores(const SocialRule& rule);
// Sorted out-degrees.
std::vector<int> score_sequence(const SocialRule& rule);

Condensation irreducible_components(const SocialRule& rule);

// The top component, found with a single peel over dominator counts.
std::vector<int> max_component(const SocialRule& rule);

bool is_irreducible(const SocialRule& rule);
bool is_transitive(const SocialRule& rule);

// Exact count: C(M,3) - sum C(s_i, 2).
long long count_3cycles(const SocialRule& rule);

// A sequence of all outcomes, each dominating its successor.
std::vector<int> hamiltonian_path(const SocialRule& rule);

}  // namespace fosor
