#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "core/dynamics.hpp"
#include "core/model.hpp"

namespace fosor {

// Stratum index of an outcome outside the universal basin.
inline constexpr int kDeepnessInfinite = std::numeric_limits<int>::max();
// u-deepness of an outcome that is not free.
inline constexpr int kUDeepnessNone = std::numeric_limits<int>::min();

// The stratified universal basin of attraction of z: strata[d] holds
// the outcomes of deepness d, strata[0] = {z} when z is free.
struct BasinReport {
  int z = -1;
  std::vector<std::vector<int>> strata;  // each ascending
  std::vector<int> deepness;             // per outcome; kDeepnessInfinite outside
  int u_deepness = kUDeepnessNone;
  // Predecessor one stratum up (towards z) recorded while expanding the
  // frontier; -1 for z itself and for outcomes outside the basin.
  std::vector<int> parent;

  bool covers_all(int outcome_count) const;
  std::vector<int> members() const;  // union of the strata, ascending
};

// The frontier-expansion algorithm: prune components above z's, reject
// non-free z, then grow stratum by stratum: x joins stratum i+1 when,
// for some dominator y of x whose separation set does not contain any
// dominator separation of z, the best neighbor of x within the object
// sep(x, y) lands in stratum i.
BasinReport universal_basin(const SocialRule& rule, int z);

// z's universal basin is the whole outcome set.
bool is_u_local_optimum(const SocialRule& rule, int z);

// Early-exit membership test: stops as soon as x is placed in a stratum.
bool in_universal_basin(const SocialRule& rule, int x, int z);

// Stratum index of x in z's basin, or kDeepnessInfinite.
int deepness(const SocialRule& rule, int x, int z);

struct WitnessResult {
  ObjectsScheme scheme;
  Agenda agenda;
  PathTrace trace;  // starts at the queried x, ends up in z
};

// An objects scheme keeping z a local optimum together with a verified
// maximal domination path from x to z, when x lies in z's basin.
std::optional<WitnessResult> witness_scheme(const SocialRule& rule, int x, int z);

// Definition-level brute force over every covering objects scheme;
// independent of the frontier algorithm. Doubly exponential in the
// feature count, so restricted to n <= 4.
std::vector<int> oracle_universal_basin(const SocialRule& rule, int z);

// Minimum hop count from x to z over all schemes admitted by the
// oracle, or kDeepnessInfinite. Same n <= 4 restriction.
int oracle_deepness(const SocialRule& rule, int x, int z);

// Non-lifting subset of component `rank`: members x whose admissible
// dominators (the G set for z) all stay inside the component. Empty
// when z is not free.
std::vector<int> s_set(const SocialRule& rule, int z, int rank,
                       const Condensation& cond);

}  // namespace fosor
