#include "core/ubasin.hpp"

#include <algorithm>
#include <queue>

namespace fosor {

bool BasinReport::covers_all(int outcome_count) const {
  int total = 0;
  for (const auto& s : strata) total += static_cast<int>(s.size());
  return total == outcome_count;
}

std::vector<int> BasinReport::members() const {
  std::vector<int> out;
  for (const auto& s : strata) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Per-rule digit table so separating-feature masks cost O(n) with no
// allocation in the hot loops.
struct SepTable {
  int n;
  std::vector<int> digits;  // m rows of n digits

  explicit SepTable(const FeatureSpace& space)
      : n(space.feature_count()), digits(static_cast<size_t>(space.outcome_count()) * n) {
    for (int x = 0; x < space.outcome_count(); ++x) {
      auto v = space.decode(x);
      std::copy(v.begin(), v.end(), digits.begin() + static_cast<size_t>(x) * n);
    }
  }

  uint32_t sep(int x, int y) const {
    const int* dx = digits.data() + static_cast<size_t>(x) * n;
    const int* dy = digits.data() + static_cast<size_t>(y) * n;
    uint32_t mask = 0;
    for (int f = 0; f < n; ++f)
      if (dx[f] != dy[f]) mask |= 1u << f;
    return mask;
  }
};

// Separation masks of every outcome beating x.
std::vector<uint32_t> dominator_seps(const SocialRule& rule, const SepTable& sep, int x) {
  std::vector<uint32_t> masks;
  for (int w = 0; w < rule.outcome_count(); ++w)
    if (w != x && rule.dominates(w, x)) masks.push_back(sep.sep(w, x));
  return masks;
}

// True when no dominator separation is contained in `candidate`.
bool admissible(uint32_t candidate, const std::vector<uint32_t>& dom_seps) {
  for (uint32_t m : dom_seps)
    if ((m & ~candidate) == 0) return false;
  return true;
}

// Frontier expansion; stops early once `stop_at` (>= 0) is placed.
BasinReport compute_basin(const SocialRule& rule, int z, int stop_at) {
  int m = rule.outcome_count();
  BasinReport report;
  report.z = z;
  report.deepness.assign(m, kDeepnessInfinite);
  report.parent.assign(m, -1);

  SepTable sep(rule.space());
  auto z_doms = dominator_seps(rule, sep, z);
  for (uint32_t mask : z_doms)
    if (std::popcount(mask) == 1) return report;  // z is not free

  // Outcomes in components above z's can never reach it.
  auto cond = irreducible_components(rule);
  int h = cond.component_of[z];
  std::vector<char> active(m, 1);
  for (int x = 0; x < m; ++x)
    if (cond.component_of[x] > h) active[x] = 0;

  report.strata.push_back({z});
  report.deepness[z] = 0;
  report.u_deepness = 0;
  active[z] = 0;
  if (stop_at == z) return report;

  // The admissible-move targets of every outcome: for each dominator y
  // of x whose separation keeps z a local optimum, the unique best
  // neighbor of x within the object sep(x, y), when one exists. x joins
  // stratum i+1 exactly when one of these targets sits in stratum i.
  std::vector<std::vector<int>> targets(static_cast<size_t>(m));
  for (int x = 0; x < m; ++x) {
    if (!active[x]) continue;
    for (int y = 0; y < m; ++y) {
      if (!rule.dominates(y, x)) continue;
      uint32_t step = sep.sep(x, y);
      if (!admissible(step, z_doms)) continue;
      auto b = best_neighbor(rule, x, FeatureObject(step));
      if (b) targets[static_cast<size_t>(x)].push_back(*b);
    }
  }

  int depth = 0;
  while (true) {
    std::vector<int> next;
    for (int x = 0; x < m; ++x) {
      if (!active[x]) continue;
      int parent = -1;
      for (int b : targets[static_cast<size_t>(x)])
        if (report.deepness[b] == depth) {
          parent = b;
          break;
        }
      if (parent < 0) continue;
      active[x] = 0;
      report.parent[x] = parent;
      report.deepness[x] = depth + 1;
      next.push_back(x);
      if (x == stop_at) {
        report.strata.push_back(std::move(next));
        report.u_deepness = depth + 1;
        return report;
      }
    }
    if (next.empty()) break;
    report.u_deepness = ++depth;
    report.strata.push_back(std::move(next));
  }
  return report;
}

}  // namespace

BasinReport universal_basin(const SocialRule& rule, int z) {
  return compute_basin(rule, z, -1);
}

bool is_u_local_optimum(const SocialRule& rule, int z) {
  return universal_basin(rule, z).covers_all(rule.outcome_count());
}

bool in_universal_basin(const SocialRule& rule, int x, int z) {
  return compute_basin(rule, z, x).deepness[x] != kDeepnessInfinite;
}

int deepness(const SocialRule& rule, int x, int z) {
  return compute_basin(rule, z, x).deepness[x];
}

std::optional<WitnessResult> witness_scheme(const SocialRule& rule, int x, int z) {
  auto report = universal_basin(rule, z);
  if (report.deepness[x] == kDeepnessInfinite) return std::nullopt;

  const auto& space = rule.space();
  // Hop objects from x towards z, one per frontier edge.
  std::vector<uint32_t> hop_masks;
  for (int cur = x; cur != z; cur = report.parent[cur])
    hop_masks.push_back(separating_features(space, report.parent[cur], cur));

  std::vector<FeatureObject> objects;
  std::vector<int> order;
  uint32_t covered = 0;
  for (uint32_t mask : hop_masks) {
    auto it = std::find_if(objects.begin(), objects.end(),
                           [&](const FeatureObject& o) { return o.mask() == mask; });
    if (it == objects.end()) {
      objects.emplace_back(mask);
      it = objects.end() - 1;
    }
    order.push_back(static_cast<int>(it - objects.begin()));
    covered |= mask;
  }
  // Singleton padding for uncovered features. z is free, so no
  // singleton object admits a preferred neighbor of z.
  for (int f = 0; f < space.feature_count(); ++f) {
    if ((covered >> f) & 1u) continue;
    objects.emplace_back(1u << f);
    order.push_back(static_cast<int>(objects.size()) - 1);
  }

  ObjectsScheme scheme(space, std::move(objects));
  Agenda agenda(scheme, std::move(order));
  auto trace = run_agenda(rule, x, scheme, agenda);
  if (trace.terminal != PathTrace::Terminal::LocalOptimum || trace.optimum != z)
    throw DomainError("witness replay failed to end up in the target outcome");
  return WitnessResult{std::move(scheme), std::move(agenda), std::move(trace)};
}

namespace {

struct OracleResult {
  std::vector<char> in_basin;
  std::vector<int> dist;
};

OracleResult oracle_compute(const SocialRule& rule, int z) {
  const auto& space = rule.space();
  int n = space.feature_count();
  if (n > 4) throw DomainError("oracle enumeration is limited to 4 features");
  int m = rule.outcome_count();
  int object_count = (1 << n) - 1;

  // Best-neighbor move per (object, outcome), and whether the object
  // breaks z's local optimality.
  std::vector<std::vector<int>> moves(object_count, std::vector<int>(m, -1));
  std::vector<char> breaks_z(object_count, 0);
  for (int o = 0; o < object_count; ++o) {
    FeatureObject obj(static_cast<uint32_t>(o + 1));
    for (int x = 0; x < m; ++x) {
      auto b = best_neighbor(rule, x, obj);
      if (b) moves[o][x] = *b;
    }
    if (!preferred_neighbors(rule, z, obj).empty()) breaks_z[o] = 1;
  }

  uint32_t all_features = (1u << n) - 1;
  OracleResult result;
  result.in_basin.assign(m, 0);
  result.dist.assign(m, kDeepnessInfinite);

  std::vector<int> dist(m);
  for (uint32_t s = 1; s < (1u << object_count); ++s) {
    uint32_t covered = 0;
    bool ok = true;
    for (int o = 0; o < object_count && ok; ++o) {
      if (!((s >> o) & 1u)) continue;
      if (breaks_z[o]) ok = false;
      covered |= static_cast<uint32_t>(o + 1);
    }
    if (!ok || covered != all_features) continue;

    // Reverse BFS from z through the scheme's move graph.
    std::fill(dist.begin(), dist.end(), kDeepnessInfinite);
    dist[z] = 0;
    std::queue<int> queue;
    queue.push(z);
    while (!queue.empty()) {
      int y = queue.front();
      queue.pop();
      for (int x = 0; x < m; ++x) {
        if (dist[x] != kDeepnessInfinite) continue;
        for (int o = 0; o < object_count; ++o) {
          if (((s >> o) & 1u) && moves[o][x] == y) {
            dist[x] = dist[y] + 1;
            queue.push(x);
            break;
          }
        }
      }
    }
    for (int x = 0; x < m; ++x) {
      if (dist[x] == kDeepnessInfinite) continue;
      result.in_basin[x] = 1;
      result.dist[x] = std::min(result.dist[x], dist[x]);
    }
  }
  return result;
}

}  // namespace

std::vector<int> oracle_universal_basin(const SocialRule& rule, int z) {
  auto res = oracle_compute(rule, z);
  std::vector<int> out;
  for (int x = 0; x < rule.outcome_count(); ++x)
    if (res.in_basin[x]) out.push_back(x);
  return out;
}

int oracle_deepness(const SocialRule& rule, int x, int z) {
  return oracle_compute(rule, z).dist[x];
}

std::vector<int> s_set(const SocialRule& rule, int z, int rank,
                       const Condensation& cond) {
  if (!is_free(rule, z)) return {};
  const auto& space = rule.space();
  SepTable sep(space);
  auto z_doms = dominator_seps(rule, sep, z);

  std::vector<int> out;
  for (int x : cond.components[rank]) {
    bool inside = true;
    for (int y = 0; y < rule.outcome_count() && inside; ++y) {
      if (y == x || !rule.dominates(y, x)) continue;
      uint32_t step = sep.sep(x, y);
      if (!admissible(step, z_doms)) continue;
      // The preferred set under sep(x, y) contains y but might still be
      // cyclic, in which case the move never fires and y is harmless.
      if (!best_neighbor(rule, x, FeatureObject(step))) continue;
      if (cond.component_of[y] != rank) inside = false;
    }
    if (inside) out.push_back(x);
  }
  return out;
}

}  // namespace fosor
