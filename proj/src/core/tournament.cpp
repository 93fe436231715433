#include "core/tournament.hpp"

#include <algorithm>
#include <numeric>

namespace fosor {

std::vector<int> scores(const SocialRule& rule) {
  int m = rule.outcome_count();
  std::vector<int> s(m);
  for (int i = 0; i < m; ++i) s[i] = rule.score(i);
  return s;
}

std::vector<int> score_sequence(const SocialRule& rule) {
  auto s = scores(rule);
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

// Sorts `members` by (key, outcome index) and returns the shortest
// prefix whose key sum meets C(k,2): the extremal irreducible component.
// Keys must be the member scores within `members` itself, so callers
// recompute them before every peel.
std::vector<int> peel(std::vector<int> members, const std::vector<long long>& key) {
  std::sort(members.begin(), members.end(), [&](int a, int b) {
    return key[a] != key[b] ? key[a] < key[b] : a < b;
  });
  long long sum = 0;
  size_t k = 0;
  for (; k < members.size(); ++k) {
    sum += key[members[k]];
    long long pairs = static_cast<long long>(k + 1) * k / 2;
    if (sum == pairs) break;
  }
  // The full set always satisfies the equality, so k < size here.
  members.resize(k + 1);
  return members;
}

std::vector<long long> residual_scores(const SocialRule& rule,
                                       const std::vector<int>& members) {
  std::vector<long long> key(rule.outcome_count(), 0);
  for (int i : members) {
    long long s = 0;
    for (int j : members)
      if (i != j && rule.dominates(i, j)) ++s;
    key[i] = s;
  }
  return key;
}

}  // namespace

Condensation irreducible_components(const SocialRule& rule) {
  int m = rule.outcome_count();
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);

  // Peel the lowest component, then recompute scores on the remainder.
  Condensation cond;
  cond.component_of.assign(m, -1);
  std::vector<int> rest = all;
  while (!rest.empty()) {
    auto key = residual_scores(rule, rest);
    auto lowest = peel(rest, key);
    std::sort(lowest.begin(), lowest.end());
    for (int x : lowest) cond.component_of[x] = static_cast<int>(cond.components.size());
    cond.components.push_back(std::move(lowest));
    std::vector<int> next;
    for (int x : rest)
      if (cond.component_of[x] == -1) next.push_back(x);
    rest = std::move(next);
  }
  return cond;
}

std::vector<int> max_component(const SocialRule& rule) {
  int m = rule.outcome_count();
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  // Dominator counts turn the top component into the bottom one.
  std::vector<long long> key(m);
  auto s = scores(rule);
  for (int i = 0; i < m; ++i) key[i] = m - 1 - s[i];
  auto top = peel(std::move(all), key);
  std::sort(top.begin(), top.end());
  return top;
}

bool is_irreducible(const SocialRule& rule) {
  auto seq = score_sequence(rule);
  long long sum = 0;
  for (size_t k = 0; k + 1 < seq.size(); ++k) {
    sum += seq[k];
    long long pairs = static_cast<long long>(k + 1) * k / 2;
    if (sum <= pairs) return false;
  }
  return true;
}

bool is_transitive(const SocialRule& rule) {
  auto seq = score_sequence(rule);
  for (size_t i = 0; i < seq.size(); ++i)
    if (seq[i] != static_cast<int>(i)) return false;
  return true;
}

long long count_3cycles(const SocialRule& rule) {
  long long m = rule.outcome_count();
  long long total = m * (m - 1) * (m - 2) / 6;
  for (int s : scores(rule)) total -= static_cast<long long>(s) * (s - 1) / 2;
  return total;
}

std::vector<int> hamiltonian_path(const SocialRule& rule) {
  std::vector<int> path;
  int m = rule.outcome_count();
  path.reserve(m);
  for (int x = 0; x < m; ++x) {
    // Insert before the first node x dominates, else append.
    auto it = std::find_if(path.begin(), path.end(),
                           [&](int y) { return rule.dominates(x, y); });
    path.insert(it, x);
  }
  return path;
}

}  // namespace fosor
