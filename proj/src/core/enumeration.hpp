#pragma once

#include <gmpxx.h>

#include <string>

#include "core/model.hpp"

namespace fosor {

struct ExactCount {
  mpz_class value;
};

struct ExactProbability {
  mpq_class value;  // canonical rational in [0, 1]
  // Fixed-point rendering with round-half-even ties; trailing zeros and a
  // bare decimal point are stripped, so exact integers print as "0"/"1".
  std::string decimal(int digits) const;
};

// Number of nonisomorphic tournaments on M nodes, summed over the odd-part
// multi-indices. Capped because the partition count explodes.
ExactCount count_tournaments(int m);
inline constexpr int kTournamentCountCap = 64;

// Probability that a random tournament on M nodes is irreducible.
ExactProbability prob_irreducible(int m);

// Number of two-feature rules with exactly k free outcomes, via the
// downward recursion e_k = a_k - sum_{l>k} C(l,k) e_l.
ExactCount count_rules_with_k_free(int m1, int m2, int k);
// Same count via the alternating subset-product formula.
ExactCount count_rules_with_k_free_explicit(int m1, int m2, int k);

// e_k / 2^{C(m1*m2, 2)}.
ExactProbability prob_k_free(int m1, int m2, int k);

// prod_{i>=2} m_i with the value counts sorted nonincreasingly.
long long max_local_optima(const FeatureSpace& space);

// sum_j (m_j - 1).
int min_score_local_optimum(const FeatureSpace& space);

// Expected-count gain of the feature model over the classical one:
// F(n, M, sigma) = 2^{n + M - 1 - sigma}, normalized so F(1, m, m) = 1.
ExactCount gain_function(int n, long long m, long long sigma);

// Probability that a random tournament on M nodes has a dominant node.
ExactProbability prob_classical_optimum(int m);

// Probability that a fixed outcome is free: 2^n / 2^sigma.
ExactProbability prob_outcome_free(const FeatureSpace& space);

}  // namespace fosor
