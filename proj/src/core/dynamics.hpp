#pragma once

#include <bit>
#include <optional>
#include <span>
#include <vector>

#include "core/model.hpp"
#include "core/tournament.hpp"

namespace fosor {

// Bit mask of the features on which x and y differ.
uint32_t separating_features(const FeatureSpace& space, int x, int y);
// Number of features separating x and y.
int prominent_distance(const FeatureSpace& space, int x, int y);
// Minimum number of hyperplane walls between the two outcomes,
// i.e. the sum of per-feature value gaps.
int hyperplane_distance(const FeatureSpace& space, int x, int y);

// Outcomes beating x that agree with x outside the object.
std::vector<int> preferred_neighbors(const SocialRule& rule, int x,
                                     FeatureObject obj);
// The unique dominance-maximum of the preferred neighbors, if any.
std::optional<int> best_neighbor(const SocialRule& rule, int x,
                                 FeatureObject obj);

// z is free iff every outcome beating z differs from it in >= 2 features;
// exactly the outcomes that are local optima for some objects scheme.
bool is_free(const SocialRule& rule, int z);

bool is_local_optimum(const SocialRule& rule, int z, const ObjectsScheme& scheme);

struct PathTrace {
  // Stalled marks a state that is not a local optimum (some preferred
  // set is nonempty) but where no object has a best neighbor, because
  // every nonempty preferred set is cyclic. Such a run ends without
  // reaching an optimum or a limit domination cycle.
  enum class Terminal { LocalOptimum, LimitCycle, Stalled };

  std::vector<int> states;        // x0..xs, consecutive entries distinct
  std::vector<int> objects_used;  // scheme object index per step
  Terminal terminal;
  int optimum = -1;               // set for LocalOptimum
  int period = 0;                 // moves per loop, set for LimitCycle
  std::vector<int> cycle_states;  // distinct states of the limit cycle
};

// Deterministic voting process: the agenda is cycled; at each position
// the best neighbor for that object is taken when one exists, else the
// state is kept and the next position is tried. Terminates on a full
// no-move pass (local optimum) or on a repeated (state, phase) pair
// with moves in between (limit cycle).
PathTrace run_agenda(const SocialRule& rule, int start,
                     const ObjectsScheme& scheme, const Agenda& agenda,
                     long long step_budget = -1);

// Outcomes whose run under this agenda ends up in z.
std::vector<int> basin_for_agenda(const SocialRule& rule, int z,
                                  const ObjectsScheme& scheme,
                                  const Agenda& agenda);

// Unordered basin: reverse reachability of z in the best-neighbor move
// graph, empty unless z is a local optimum for the scheme.
std::vector<int> basin_for_scheme(const SocialRule& rule, int z,
                                  const ObjectsScheme& scheme);

bool is_global_for_agenda(const SocialRule& rule, int z,
                          const ObjectsScheme& scheme, const Agenda& agenda);

enum class BoundedAnswer { Yes, No, UnknownUpToBound };

// Checks every agenda of length <= max_agenda_len. "Yes" is a bounded
// verification claim, only issued when the bound reaches k*M.
BoundedAnswer is_global_for_scheme_bounded(const SocialRule& rule, int z,
                                           const ObjectsScheme& scheme,
                                           int max_agenda_len);

// x is lifting for the scheme when some object's best neighbor lies in
// a strictly higher irreducible component.
bool is_lifting(const SocialRule& rule, int x, const ObjectsScheme& scheme,
                const Condensation& cond);

// Witness y in a higher component making x lifting for some scheme, if
// one exists: y must satisfy sep(w,y) not-subset-of sep(x,y) for all
// w beating y.
std::optional<int> exists_lifting_scheme(const SocialRule& rule, int x,
                                         const Condensation& cond);

// A rule attaining the maximum number of free outcomes: exactly
// prod_{i>=2} m_i of them with the value counts sorted nonincreasingly.
SocialRule construct_extremal_rule(const FeatureSpace& space);

// Best-neighbor move table for one scheme, precomputed once so agenda
// runs cost O(1) per step.
class MoveTable {
 public:
  MoveTable(const SocialRule& rule, const ObjectsScheme& scheme);
  // -1 when the object yields no move from x.
  int move(int x, int object_index) const {
    return moves_[static_cast<size_t>(object_index) * m_ + x];
  }
  // Nonempty but cyclic preferred set: no best neighbor exists.
  bool stalled(int x, int object_index) const {
    return stalled_[static_cast<size_t>(object_index) * m_ + x];
  }
  int outcome_count() const { return m_; }

 private:
  int m_;
  std::vector<int> moves_;
  std::vector<char> stalled_;
};

}  // namespace fosor
