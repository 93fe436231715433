#include "core/dynamics.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace fosor {

uint32_t separating_features(const FeatureSpace& space, int x, int y) {
  auto vx = space.decode(x);
  auto vy = space.decode(y);
  uint32_t mask = 0;
  for (int f = 0; f < space.feature_count(); ++f)
    if (vx[f] != vy[f]) mask |= 1u << f;
  return mask;
}

int prominent_distance(const FeatureSpace& space, int x, int y) {
  return std::popcount(separating_features(space, x, y));
}

int hyperplane_distance(const FeatureSpace& space, int x, int y) {
  auto vx = space.decode(x);
  auto vy = space.decode(y);
  int d = 0;
  for (int f = 0; f < space.feature_count(); ++f) d += std::abs(vx[f] - vy[f]);
  return d;
}

std::vector<int> preferred_neighbors(const SocialRule& rule, int x,
                                     FeatureObject obj) {
  std::vector<int> out;
  const auto& space = rule.space();
  for (int y = 0; y < rule.outcome_count(); ++y) {
    if (y == x || !rule.dominates(y, x)) continue;
    if ((separating_features(space, x, y) & ~obj.mask()) == 0) out.push_back(y);
  }
  return out;
}

std::optional<int> best_neighbor(const SocialRule& rule, int x,
                                 FeatureObject obj) {
  auto phi = preferred_neighbors(rule, x, obj);
  if (phi.empty()) return std::nullopt;
  int best = phi[0];
  for (size_t i = 1; i < phi.size(); ++i)
    if (rule.dominates(phi[i], best)) best = phi[i];
  // The running maximum only dominates the candidates seen after it
  // took the lead; a cyclic preferred set has no best neighbor at all.
  for (int w : phi)
    if (w != best && !rule.dominates(best, w)) return std::nullopt;
  return best;
}

bool is_free(const SocialRule& rule, int z) {
  const auto& space = rule.space();
  for (int w = 0; w < rule.outcome_count(); ++w)
    if (w != z && rule.dominates(w, z) && prominent_distance(space, w, z) == 1)
      return false;
  return true;
}

bool is_local_optimum(const SocialRule& rule, int z, const ObjectsScheme& scheme) {
  const auto& space = rule.space();
  for (int w = 0; w < rule.outcome_count(); ++w) {
    if (w == z || !rule.dominates(w, z)) continue;
    uint32_t sep = separating_features(space, w, z);
    for (const auto& obj : scheme.objects())
      if ((sep & ~obj.mask()) == 0) return false;
  }
  return true;
}

MoveTable::MoveTable(const SocialRule& rule, const ObjectsScheme& scheme)
    : m_(rule.outcome_count()) {
  int k = scheme.size();
  moves_.assign(static_cast<size_t>(k) * m_, -1);
  stalled_.assign(static_cast<size_t>(k) * m_, 0);
  for (int o = 0; o < k; ++o) {
    for (int x = 0; x < m_; ++x) {
      auto b = best_neighbor(rule, x, scheme.objects()[o]);
      if (b) {
        moves_[static_cast<size_t>(o) * m_ + x] = *b;
      } else if (!preferred_neighbors(rule, x, scheme.objects()[o]).empty()) {
        stalled_[static_cast<size_t>(o) * m_ + x] = 1;
      }
    }
  }
}

namespace {

PathTrace run_with_table(const MoveTable& table, int object_count, int start,
                         std::span<const int> order, long long step_budget,
                         int start_phase = 0) {
  int t = static_cast<int>(order.size());
  int m = table.outcome_count();

  PathTrace trace;
  trace.states.push_back(start);

  struct Visit {
    int moves = -1;
    int trace_pos = -1;
  };
  std::vector<Visit> visited(static_cast<size_t>(m) * t);

  int x = start;
  int phase = start_phase;
  int moves = 0;
  long long steps = 0;
  for (;;) {
    Visit& v = visited[static_cast<size_t>(x) * t + phase];
    if (v.moves >= 0) {
      if (v.moves == moves) {
        // A whole agenda pass without a move. Distinguish a genuine
        // local optimum from a state whose preferred sets are cyclic.
        bool any_preferred = false;
        for (int o = 0; o < object_count && !any_preferred; ++o)
          any_preferred = table.move(x, o) >= 0 || table.stalled(x, o);
        trace.terminal = any_preferred ? PathTrace::Terminal::Stalled
                                       : PathTrace::Terminal::LocalOptimum;
        trace.optimum = any_preferred ? -1 : x;
        return trace;
      }
      trace.terminal = PathTrace::Terminal::LimitCycle;
      trace.period = moves - v.moves;
      for (int p = v.trace_pos; p < static_cast<int>(trace.states.size()) - 1; ++p) {
        int s = trace.states[p];
        if (std::find(trace.cycle_states.begin(), trace.cycle_states.end(), s) ==
            trace.cycle_states.end())
          trace.cycle_states.push_back(s);
      }
      return trace;
    }
    v.moves = moves;
    v.trace_pos = static_cast<int>(trace.states.size()) - 1;

    int next = table.move(x, order[phase]);
    if (next >= 0) {
      trace.states.push_back(next);
      trace.objects_used.push_back(order[phase]);
      x = next;
      ++moves;
    }
    phase = (phase + 1) % t;
    if (step_budget >= 0 && ++steps > step_budget)
      throw DomainError("run_agenda: step budget exhausted");
  }
}

// An ordered domination path may enter the repeating agenda at any
// point of the cycle, so membership in the ordered basin quantifies
// over the starting phase.
bool reaches_from_some_phase(const MoveTable& table, int object_count, int y,
                             std::span<const int> order, int z) {
  for (int p = 0; p < static_cast<int>(order.size()); ++p) {
    auto trace = run_with_table(table, object_count, y, order, -1, p);
    if (trace.terminal == PathTrace::Terminal::LocalOptimum && trace.optimum == z)
      return true;
  }
  return false;
}

}  // namespace

PathTrace run_agenda(const SocialRule& rule, int start,
                     const ObjectsScheme& scheme, const Agenda& agenda,
                     long long step_budget) {
  MoveTable table(rule, scheme);
  return run_with_table(table, scheme.size(), start, agenda.order(), step_budget);
}

std::vector<int> basin_for_agenda(const SocialRule& rule, int z,
                                  const ObjectsScheme& scheme,
                                  const Agenda& agenda) {
  MoveTable table(rule, scheme);
  std::vector<int> basin;
  for (int y = 0; y < rule.outcome_count(); ++y)
    if (reaches_from_some_phase(table, scheme.size(), y, agenda.order(), z))
      basin.push_back(y);
  return basin;
}

std::vector<int> basin_for_scheme(const SocialRule& rule, int z,
                                  const ObjectsScheme& scheme) {
  if (!is_local_optimum(rule, z, scheme)) return {};
  MoveTable table(rule, scheme);
  int m = rule.outcome_count();
  std::vector<char> in_basin(m, 0);
  in_basin[z] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < m; ++x) {
      if (in_basin[x]) continue;
      for (int o = 0; o < scheme.size(); ++o) {
        int next = table.move(x, o);
        if (next >= 0 && in_basin[next]) {
          in_basin[x] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < m; ++x)
    if (in_basin[x]) out.push_back(x);
  return out;
}

bool is_global_for_agenda(const SocialRule& rule, int z,
                          const ObjectsScheme& scheme, const Agenda& agenda) {
  MoveTable table(rule, scheme);
  for (int y = 0; y < rule.outcome_count(); ++y)
    if (!reaches_from_some_phase(table, scheme.size(), y, agenda.order(), z))
      return false;
  return true;
}

namespace {

// Enumerates agendas of the given length (sequences covering all k
// objects); returns false as soon as some start fails to reach z.
bool all_agendas_reach(const MoveTable& table, int k, int z, int length,
                       std::vector<int>& order, int missing) {
  int pos = static_cast<int>(order.size());
  if (pos == length) {
    if (missing != 0) return true;  // not a valid agenda
    for (int y = 0; y < table.outcome_count(); ++y)
      if (!reaches_from_some_phase(table, k, y, order, z)) return false;
    return true;
  }
  if (std::popcount(static_cast<unsigned>(missing)) > length - pos)
    return true;  // cannot cover the remaining objects
  for (int h = 0; h < k; ++h) {
    order.push_back(h);
    bool ok = all_agendas_reach(table, k, z, length, order, missing & ~(1 << h));
    order.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

BoundedAnswer is_global_for_scheme_bounded(const SocialRule& rule, int z,
                                           const ObjectsScheme& scheme,
                                           int max_agenda_len) {
  int k = scheme.size();
  if (max_agenda_len < k)
    throw DomainError("agenda length bound smaller than the scheme size");
  MoveTable table(rule, scheme);
  std::vector<int> order;
  for (int len = k; len <= max_agenda_len; ++len)
    if (!all_agendas_reach(table, k, z, len, order, (1 << k) - 1))
      return BoundedAnswer::No;
  return max_agenda_len >= k * rule.outcome_count() ? BoundedAnswer::Yes
                                                    : BoundedAnswer::UnknownUpToBound;
}

bool is_lifting(const SocialRule& rule, int x, const ObjectsScheme& scheme,
                const Condensation& cond) {
  for (const auto& obj : scheme.objects()) {
    auto b = best_neighbor(rule, x, obj);
    if (b && cond.component_of[*b] > cond.component_of[x]) return true;
  }
  return false;
}

std::optional<int> exists_lifting_scheme(const SocialRule& rule, int x,
                                         const Condensation& cond) {
  const auto& space = rule.space();
  for (int y = 0; y < rule.outcome_count(); ++y) {
    if (cond.component_of[y] <= cond.component_of[x]) continue;
    uint32_t sep_xy = separating_features(space, x, y);
    bool ok = true;
    for (int w = 0; w < rule.outcome_count() && ok; ++w) {
      if (w == y || !rule.dominates(w, y)) continue;
      if ((separating_features(space, w, y) & ~sep_xy) == 0) ok = false;
    }
    if (ok) return y;
  }
  return std::nullopt;
}

namespace {

// One slice-construction rule over a sorted (nonincreasing) prefix of
// the value counts, with its set of free outcomes.
struct SliceRule {
  std::vector<char> dom;       // row-major M x M
  std::vector<char> optimum;   // free outcomes
  int m = 0;

  bool dominates(int i, int j) const { return dom[static_cast<size_t>(i) * m + j]; }
};

// Builds m[level] rules on the first level+1 (sorted) features, each
// with exactly prod_{i>=1} m_i free outcomes and pairwise disjoint
// free sets.
std::vector<SliceRule> slice_family(const std::vector<int>& m, int level) {
  int values = m[level];
  if (level == 0) {
    // Transitive rules: rule l has the single optimum l on top.
    std::vector<SliceRule> family(values);
    for (int l = 0; l < values; ++l) {
      SliceRule& r = family[l];
      r.m = values;
      r.dom.assign(static_cast<size_t>(values) * values, 0);
      r.optimum.assign(values, 0);
      r.optimum[l] = 1;
      for (int i = 0; i < values; ++i)
        for (int j = 0; j < values; ++j)
          if (i != j)
            r.dom[static_cast<size_t>(i) * values + j] =
                ((i - l + values) % values) < ((j - l + values) % values);
    }
    return family;
  }

  auto sub = slice_family(m, level - 1);
  int sub_m = sub[0].m;
  int full_m = sub_m * values;
  std::vector<SliceRule> family(values);
  for (int l = 0; l < values; ++l) {
    SliceRule& r = family[l];
    r.m = full_m;
    r.dom.assign(static_cast<size_t>(full_m) * full_m, 0);
    r.optimum.assign(full_m, 0);
    auto sub_of_slice = [&](int slice) -> const SliceRule& {
      return sub[(slice + l) % values];
    };
    for (int x = 0; x < full_m; ++x) {
      int px = x / values, lx = x % values;
      if (sub_of_slice(lx).optimum[px]) r.optimum[x] = 1;
      for (int y = 0; y < full_m; ++y) {
        if (x == y) continue;
        int py = y / values, ly = y % values;
        bool x_wins;
        if (lx == ly) {
          x_wins = sub_of_slice(lx).dominates(px, py);
        } else if (px == py) {
          // Cross-slice pairs at prominent distance 1: a slice optimum
          // must beat them. The two prefixes cannot both be optima of
          // their (distinct) slice rules: the free sets are disjoint.
          if (sub_of_slice(lx).optimum[px])
            x_wins = true;
          else if (sub_of_slice(ly).optimum[py])
            x_wins = false;
          else
            x_wins = x < y;
        } else {
          x_wins = x < y;  // arbitrary arc, fixed canonically
        }
        r.dom[static_cast<size_t>(x) * full_m + y] = x_wins;
      }
    }
  }
  return family;
}

}  // namespace

SocialRule construct_extremal_rule(const FeatureSpace& space) {
  int n = space.feature_count();
  // Feature permutation sorting value counts nonincreasingly.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return space.value_counts()[a] > space.value_counts()[b];
  });
  std::vector<int> sorted_counts(n);
  for (int s = 0; s < n; ++s) sorted_counts[s] = space.value_counts()[perm[s]];

  auto family = slice_family(sorted_counts, n - 1);
  const SliceRule& constructed = family[0];

  // Map each outcome to its index in the sorted space.
  int m = space.outcome_count();
  std::vector<int> sorted_index(m);
  for (int x = 0; x < m; ++x) {
    auto values = space.decode(x);
    int idx = 0;
    for (int s = 0; s < n; ++s) idx = idx * sorted_counts[s] + values[perm[s]];
    sorted_index[x] = idx;
  }

  RuleBuilder builder(space);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (constructed.dominates(sorted_index[i], sorted_index[j]))
        builder.prefer(i, j);
      else
        builder.prefer(j, i);
    }
  return std::move(builder).build();
}

}  // namespace fosor
