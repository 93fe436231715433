#include "core/stats.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>
#include <vector>

#include "core/dynamics.hpp"
#include "core/tournament.hpp"
#include "core/ubasin.hpp"

namespace fosor {

double FrequencyTable::frequency(int k) const {
  auto it = counts.find(k);
  if (it == counts.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(repetitions);
}

SocialRule random_rule(const FeatureSpace& space, RngStream& stream) {
  CoinSource coins(stream);
  RuleBuilder builder(space);
  int m = space.outcome_count();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      coins.flip() ? builder.prefer(i, j) : builder.prefer(j, i);
  return std::move(builder).build();
}

namespace {

int count_optima(const SocialRule& rule, OptimaKind kind) {
  int m = rule.outcome_count();
  int local = 0;
  std::vector<int> free_outcomes;
  for (int z = 0; z < m; ++z) {
    if (is_free(rule, z)) {
      ++local;
      free_outcomes.push_back(z);
    }
  }
  if (kind == OptimaKind::LocalOptima) return local;

  // u-local optima are free and lie in the maximum component, so only
  // those candidates need the basin computation.
  auto tmax = max_component(rule);
  int u = 0;
  for (int z : free_outcomes) {
    if (!std::binary_search(tmax.begin(), tmax.end(), z)) continue;
    if (universal_basin(rule, z).covers_all(m)) ++u;
  }
  if (u > local) throw std::logic_error("u-local count exceeded local count");
  return u;
}

}  // namespace

FrequencyTable run_experiment(const ExperimentConfig& config) {
  if (config.repetitions < 1) throw DomainError("repetitions must be >= 1");
  int workers = std::max(1, config.workers);
  auto start = std::chrono::steady_clock::now();

  long long optima_cap = max_local_optima(config.space);
  std::vector<std::map<int, long long>> partial(workers);
  std::vector<std::exception_ptr> failures(workers);
  auto shard = [&](int w) {
    try {
      for (long long rep = w; rep < config.repetitions; rep += workers) {
        auto stream = RngStream::for_repetition(config.seed, static_cast<uint64_t>(rep));
        auto rule = random_rule(config.space, stream);
        int k = count_optima(rule, config.kind);
        if (k > optima_cap) throw std::logic_error("optima count above the theorem bound");
        ++partial[w][k];
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    shard(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(shard, w);
    for (auto& t : pool) t.join();
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  FrequencyTable table;
  for (auto& p : partial)
    for (auto [k, c] : p) table.counts[k] += c;
  table.repetitions = config.repetitions;
  table.value_counts = config.space.value_counts();
  table.seed = config.seed;
  table.kind = config.kind;
  table.workers = workers;
  table.rng_id = rng_algorithm_id();
  table.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return table;
}

ExactProbability classical_baseline(int m, long long repetitions, uint64_t seed) {
  if (m < 1) throw DomainError("node count must be positive");
  if (repetitions < 1) throw DomainError("repetitions must be >= 1");
  long long hits = 0;
  std::vector<int> wins(m);
  for (long long rep = 0; rep < repetitions; ++rep) {
    auto stream = RngStream::for_repetition(seed, static_cast<uint64_t>(rep));
    CoinSource coins(stream);
    std::fill(wins.begin(), wins.end(), 0);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) ++wins[coins.flip() ? i : j];
    if (*std::max_element(wins.begin(), wins.end()) == m - 1) ++hits;
  }
  mpq_class p(mpz_class(static_cast<long>(hits)), mpz_class(static_cast<long>(repetitions)));
  p.canonicalize();
  return {p};
}

std::string to_csv(const FrequencyTable& table) {
  std::ostringstream out;
  out << "k,count,frequency\n";
  int max_k = table.counts.empty() ? 0 : table.counts.rbegin()->first;
  for (int k = 0; k <= max_k; ++k) {
    auto it = table.counts.find(k);
    long long c = it == table.counts.end() ? 0 : it->second;
    out << k << ',' << c << ','
        << static_cast<double>(c) / static_cast<double>(table.repetitions) << '\n';
  }
  return out.str();
}

}  // namespace fosor
