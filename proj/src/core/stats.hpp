#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "core/enumeration.hpp"
#include "core/model.hpp"
#include "core/rng.hpp"

namespace fosor {

enum class OptimaKind { LocalOptima, ULocalOptima };

struct ExperimentConfig {
  FeatureSpace space;
  long long repetitions = 100000;
  uint64_t seed = 0;
  OptimaKind kind = OptimaKind::LocalOptima;
  int workers = 1;
};

struct FrequencyTable {
  std::map<int, long long> counts;  // optima count -> occurrences
  long long repetitions = 0;
  // metadata echo
  std::vector<int> value_counts;
  uint64_t seed = 0;
  OptimaKind kind = OptimaKind::LocalOptima;
  int workers = 1;
  std::string rng_id;
  double wall_seconds = 0;

  double frequency(int k) const;
};

// Uniform rule: every unordered outcome pair oriented by a fair coin.
SocialRule random_rule(const FeatureSpace& space, RngStream& stream);

// Frequency of the per-rule optima count over seeded random rules.
// Results depend only on (space, repetitions, seed, kind); the worker
// count merely shards the repetitions.
FrequencyTable run_experiment(const ExperimentConfig& config);

// Empirical frequency of a dominant node in random tournaments on m
// nodes, for comparison against prob_classical_optimum.
ExactProbability classical_baseline(int m, long long repetitions, uint64_t seed);

std::string to_csv(const FrequencyTable& table);

}  // namespace fosor
