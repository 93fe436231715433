#include "core/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace fosor {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class pow2(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

std::string ExactProbability::decimal(int digits) const {
  if (digits < 0) throw DomainError("decimal digits must be nonnegative");
  mpz_class p = value.get_num(), q = value.get_den();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class t = p * scale, quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
  mpz_class twice = 2 * rem;
  if (twice > q || (twice == q && mpz_odd_p(quot.get_mpz_t()))) quot += 1;

  mpz_class ipart = quot / scale, fpart = quot % scale;
  std::string frac = fpart.get_str();
  frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = ipart.get_str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

ExactCount count_tournaments(int m) {
  if (m < 1 || m > kTournamentCountCap)
    throw DomainError("tournament count argument out of range");

  mpq_class total = 0;
  std::vector<int> parts;  // nonincreasing odd parts
  auto emit = [&]() {
    int r = static_cast<int>(parts.size());
    long long pair_sum = 0;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) pair_sum += std::gcd(parts[a], parts[b]);
    mpz_class numer = pow2(static_cast<unsigned long>((pair_sum - r) / 2));
    mpz_class denom = 1;
    for (int a = 0; a < r;) {
      int b = a;
      while (b < r && parts[b] == parts[a]) ++b;
      for (int i = a; i < b; ++i) denom *= parts[a];
      denom *= factorial(static_cast<unsigned long>(b - a));
      a = b;
    }
    total += mpq_class(numer, denom);
  };
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      if (p % 2 == 0) continue;
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, m, m);

  total.canonicalize();
  if (total.get_den() != 1)
    throw DomainError("tournament count did not reduce to an integer");
  return {total.get_num()};
}

ExactProbability prob_irreducible(int m) {
  if (m < 1) throw DomainError("node count must be positive");
  std::vector<mpq_class> p(static_cast<size_t>(m) + 1);
  p[1] = 1;
  for (int t = 2; t <= m; ++t) {
    mpq_class acc = 0;
    for (int i = 1; i < t; ++i) {
      unsigned long e = static_cast<unsigned long>(i) * (t - i);
      acc += binom(t, i) * p[i] / pow2(e);
    }
    p[t] = 1 - acc;
    p[t].canonicalize();
  }
  return {p[m]};
}

namespace {

void check_two_feature_args(int m1, int m2, int k) {
  if (m1 < m2 || m2 < 2) throw DomainError("value counts must satisfy m1 >= m2 >= 2");
  if (k < 0 || k > m2) throw DomainError("free-outcome count must lie in [0, m2]");
}

// Rules on (m1, m2) whose free set contains a fixed size-k selection,
// summed over selections.
mpz_class a_count(int m1, int m2, int k) {
  unsigned long pairs =
      static_cast<unsigned long>(m1) * m2 * (static_cast<unsigned long>(m1) * m2 - 1) / 2;
  unsigned long spent = static_cast<unsigned long>(k) * (m1 + m2 - 2);
  return binom(m1, k) * binom(m2, k) * factorial(k) * pow2(pairs - spent);
}

}  // namespace

ExactCount count_rules_with_k_free(int m1, int m2, int k) {
  check_two_feature_args(m1, m2, k);
  std::vector<mpz_class> e(static_cast<size_t>(m2) + 1);
  for (int j = m2; j >= k; --j) {
    e[j] = a_count(m1, m2, j);
    for (int l = j + 1; l <= m2; ++l) e[j] -= binom(l, j) * e[l];
  }
  return {e[k]};
}

ExactCount count_rules_with_k_free_explicit(int m1, int m2, int k) {
  check_two_feature_args(m1, m2, k);
  mpz_class total = 0;
  for (int i = k; i <= m2; ++i) {
    mpz_class coeff = 0;
    if (i == k) {
      coeff = 1;
    } else {
      int middle = i - k - 1;  // optional elements strictly between k and i
      for (uint32_t mask = 0; mask < (1u << middle); ++mask) {
        std::vector<int> s = {k};
        for (int j = 0; j < middle; ++j)
          if ((mask >> j) & 1u) s.push_back(k + 1 + j);
        s.push_back(i);
        mpz_class prod = 1;
        for (size_t j = 0; j + 1 < s.size(); ++j) prod *= binom(s[j + 1], s[j]);
        if (s.size() % 2 == 0) prod = -prod;  // sign (-1)^{#S + 1}
        coeff += prod;
      }
    }
    total += coeff * a_count(m1, m2, i);
  }
  return {total};
}

ExactProbability prob_k_free(int m1, int m2, int k) {
  check_two_feature_args(m1, m2, k);
  unsigned long pairs =
      static_cast<unsigned long>(m1) * m2 * (static_cast<unsigned long>(m1) * m2 - 1) / 2;
  mpq_class p(count_rules_with_k_free(m1, m2, k).value, pow2(pairs));
  p.canonicalize();
  return {p};
}

long long max_local_optima(const FeatureSpace& space) {
  auto counts = space.value_counts();
  std::sort(counts.begin(), counts.end(), std::greater<int>());
  long long prod = 1;
  for (size_t i = 1; i < counts.size(); ++i) prod *= counts[i];
  return prod;
}

int min_score_local_optimum(const FeatureSpace& space) {
  int total = 0;
  for (int c : space.value_counts()) total += c - 1;
  return total;
}

ExactCount gain_function(int n, long long m, long long sigma) {
  if (n < 1 || m < 1 || sigma < n) throw DomainError("infeasible gain parameters");
  long long e = n + m - 1 - sigma;
  if (e < 0) throw DomainError("infeasible gain parameters");
  return {pow2(static_cast<unsigned long>(e))};
}

ExactProbability prob_classical_optimum(int m) {
  if (m < 1) throw DomainError("node count must be positive");
  mpq_class p(m, pow2(static_cast<unsigned long>(m - 1)));
  p.canonicalize();
  return {p};
}

ExactProbability prob_outcome_free(const FeatureSpace& space) {
  mpq_class p(1, pow2(static_cast<unsigned long>(space.sigma() - space.feature_count())));
  p.canonicalize();
  return {p};
}

}  // namespace fosor
