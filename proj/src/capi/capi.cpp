#include "fosor.h"

#include <json.hpp>

#include <cstring>
#include <string>
#include <vector>

#include "core/dynamics.hpp"
#include "core/enumeration.hpp"
#include "core/model.hpp"
#include "core/stats.hpp"
#include "core/tournament.hpp"
#include "core/ubasin.hpp"

using json = nlohmann::json;

struct fosor_rule {
  fosor::SocialRule rule;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `fn` (returning the payload string) under the library's
// exception-to-status contract.
template <typename Fn>
fosor_status guarded(char** out, fosor_status domain_status, Fn&& fn) {
  if (!out) {
    g_last_error = "null output pointer";
    return FOSOR_USAGE;
  }
  *out = nullptr;
  try {
    *out = dup_string(fn());
    return FOSOR_OK;
  } catch (const fosor::DomainError& e) {
    g_last_error = e.what();
    return domain_status;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FOSOR_INTERNAL;
  }
}

fosor::FeatureSpace space_from(const int* value_counts, int n) {
  if (!value_counts || n < 1) throw fosor::DomainError("missing feature value counts");
  return fosor::FeatureSpace::create(std::vector<int>(value_counts, value_counts + n));
}

json outcome_json(const fosor::FeatureSpace& space, int index) {
  return {{"index", index}, {"values", space.decode(index)}};
}

json trace_json(const fosor::PathTrace& trace) {
  json j;
  j["states"] = trace.states;
  std::vector<int> used;
  for (int o : trace.objects_used) used.push_back(o + 1);
  j["objects_used"] = used;
  switch (trace.terminal) {
    case fosor::PathTrace::Terminal::LocalOptimum:
      j["terminal"] = "local_optimum";
      j["optimum"] = trace.optimum;
      break;
    case fosor::PathTrace::Terminal::LimitCycle:
      j["terminal"] = "limit_cycle";
      j["period"] = trace.period;
      j["cycle_states"] = trace.cycle_states;
      break;
    case fosor::PathTrace::Terminal::Stalled:
      j["terminal"] = "stalled";
      break;
  }
  return j;
}

const fosor::SocialRule& deref(const fosor_rule* rule) {
  if (!rule) throw fosor::DomainError("null rule handle");
  return rule->rule;
}

}  // namespace

extern "C" {

const char* fosor_last_error(void) { return g_last_error.c_str(); }

fosor_status fosor_rule_parse(const char* text, fosor_rule** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return FOSOR_USAGE;
  }
  *out = nullptr;
  try {
    *out = new fosor_rule{fosor::parse_rule(text)};
    return FOSOR_OK;
  } catch (const fosor::DomainError& e) {
    g_last_error = e.what();
    return FOSOR_MALFORMED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FOSOR_INTERNAL;
  }
}

fosor_status fosor_rule_serialize(const fosor_rule* rule, char** out_text) {
  return guarded(out_text, FOSOR_USAGE,
                 [&] { return fosor::serialize_rule(deref(rule)); });
}

fosor_status fosor_rule_extremal(const int* value_counts, int n, fosor_rule** out) {
  if (!out) {
    g_last_error = "null output pointer";
    return FOSOR_USAGE;
  }
  *out = nullptr;
  try {
    *out = new fosor_rule{fosor::construct_extremal_rule(space_from(value_counts, n))};
    return FOSOR_OK;
  } catch (const fosor::DomainError& e) {
    g_last_error = e.what();
    return FOSOR_USAGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FOSOR_INTERNAL;
  }
}

void fosor_rule_free(fosor_rule* rule) { delete rule; }

void fosor_string_free(char* s) { std::free(s); }

fosor_status fosor_condense(const fosor_rule* rule, char** out) {
  return guarded(out, FOSOR_USAGE, [&] {
    const auto& r = deref(rule);
    auto cond = fosor::irreducible_components(r);
    json j;
    j["components"] = cond.components;
    j["max"] = cond.max_component();
    return j.dump();
  });
}

fosor_status fosor_check(const fosor_rule* rule, const char* outcome,
                         const char* scheme, const char* agenda,
                         long long bound, char** out) {
  return guarded(out, FOSOR_USAGE, [&] {
    const auto& r = deref(rule);
    if (!outcome) throw fosor::DomainError("missing outcome");
    auto z = fosor::parse_outcome_spec(r.space(), outcome);

    json j;
    j["outcome"] = outcome_json(r.space(), z.index);
    j["free"] = fosor::is_free(r, z.index);
    j["score"] = r.score(z.index);
    auto tmax = fosor::max_component(r);
    j["in_max_component"] =
        std::binary_search(tmax.begin(), tmax.end(), z.index);

    if (agenda && !scheme) throw fosor::DomainError("agenda given without a scheme");
    if (bound >= 0 && !scheme) throw fosor::DomainError("bound given without a scheme");
    if (scheme) {
      auto s = fosor::parse_scheme_spec(r.space(), scheme);
      j["scheme"] = fosor::format_scheme_spec(s);
      j["local"] = fosor::is_local_optimum(r, z.index, s);
      if (agenda) {
        auto a = fosor::parse_agenda_spec(s, agenda);
        j["global_for_agenda"] = fosor::is_global_for_agenda(r, z.index, s, a);
      }
      if (bound >= 0) {
        auto ans = fosor::is_global_for_scheme_bounded(r, z.index, s,
                                                       static_cast<int>(bound));
        j["global_bounded"] = ans == fosor::BoundedAnswer::Yes   ? "yes"
                              : ans == fosor::BoundedAnswer::No ? "no"
                                                                : "unknown";
        j["bound"] = bound;
      }
    }
    return j.dump();
  });
}

fosor_status fosor_summary(const fosor_rule* rule, char** out) {
  return guarded(out, FOSOR_USAGE, [&] {
    const auto& r = deref(rule);
    int m = r.outcome_count();
    auto tmax = fosor::max_component(r);
    std::vector<int> free_outcomes, ulocal;
    for (int z = 0; z < m; ++z) {
      if (!fosor::is_free(r, z)) continue;
      free_outcomes.push_back(z);
      if (std::binary_search(tmax.begin(), tmax.end(), z) &&
          fosor::universal_basin(r, z).covers_all(m))
        ulocal.push_back(z);
    }
    json j;
    j["local_count"] = free_outcomes.size();
    j["ulocal_count"] = ulocal.size();
    j["has_local"] = !free_outcomes.empty();
    j["has_ulocal"] = !ulocal.empty();
    j["free_outcomes"] = free_outcomes;
    j["ulocal_outcomes"] = ulocal;
    return j.dump();
  });
}

fosor_status fosor_basin(const fosor_rule* rule, const char* outcome,
                         const char* scheme, const char* agenda, char** out) {
  return guarded(out, FOSOR_USAGE, [&] {
    const auto& r = deref(rule);
    if (!outcome) throw fosor::DomainError("missing outcome");
    auto z = fosor::parse_outcome_spec(r.space(), outcome);

    json j;
    j["outcome"] = outcome_json(r.space(), z.index);
    if (agenda && !scheme) throw fosor::DomainError("agenda given without a scheme");
    if (scheme) {
      auto s = fosor::parse_scheme_spec(r.space(), scheme);
      j["scheme"] = fosor::format_scheme_spec(s);
      if (agenda) {
        auto a = fosor::parse_agenda_spec(s, agenda);
        j["basin"] = fosor::basin_for_agenda(r, z.index, s, a);
      } else {
        j["basin"] = fosor::basin_for_scheme(r, z.index, s);
      }
      return j.dump();
    }

    auto report = fosor::universal_basin(r, z.index);
    j["free"] = fosor::is_free(r, z.index);
    j["strata"] = report.strata;
    json deep = json::array();
    for (int d : report.deepness)
      deep.push_back(d == fosor::kDeepnessInfinite ? json(nullptr) : json(d));
    j["deepness"] = deep;
    j["u_deepness"] = report.u_deepness == fosor::kUDeepnessNone
                          ? json(nullptr)
                          : json(report.u_deepness);
    j["is_u_local"] = report.covers_all(r.outcome_count());
    return j.dump();
  });
}

fosor_status fosor_witness(const fosor_rule* rule, const char* from_outcome,
                           const char* to_outcome, char** out) {
  return guarded(out, FOSOR_USAGE, [&] {
    const auto& r = deref(rule);
    if (!from_outcome || !to_outcome) throw fosor::DomainError("missing outcome");
    auto x = fosor::parse_outcome_spec(r.space(), from_outcome);
    auto z = fosor::parse_outcome_spec(r.space(), to_outcome);
    json j;
    j["from"] = outcome_json(r.space(), x.index);
    j["to"] = outcome_json(r.space(), z.index);
    auto w = fosor::witness_scheme(r, x.index, z.index);
    j["found"] = w.has_value();
    if (w) {
      j["scheme"] = fosor::format_scheme_spec(w->scheme);
      std::vector<int> positions;
      for (int p : w->agenda.order()) positions.push_back(p + 1);
      j["agenda"] = positions;
      j["trace"] = trace_json(w->trace);
    }
    return j.dump();
  });
}

fosor_status fosor_count_tournaments(int m, char** out) {
  return guarded(out, FOSOR_USAGE, [&] {
    json j;
    j["m"] = m;
    j["count"] = fosor::count_tournaments(m).value.get_str();
    return j.dump();
  });
}

fosor_status fosor_prob_irreducible(int m, int digits, char** out) {
  return guarded(out, FOSOR_USAGE, [&] {
    auto p = fosor::prob_irreducible(m);
    json j;
    j["m"] = m;
    j["rational"] = p.value.get_str();
    j["decimal"] = p.decimal(digits);
    return j.dump();
  });
}

fosor_status fosor_count_free(int m1, int m2, int digits, char** out) {
  return guarded(out, FOSOR_USAGE, [&] {
    json j;
    j["m1"] = m1;
    j["m2"] = m2;
    json rows = json::array();
    for (int k = 0; k <= m2; ++k) {
      auto count = fosor::count_rules_with_k_free(m1, m2, k);
      auto p = fosor::prob_k_free(m1, m2, k);
      rows.push_back({{"k", k},
                      {"count", count.value.get_str()},
                      {"rational", p.value.get_str()},
                      {"decimal", p.decimal(digits)}});
    }
    j["rows"] = rows;
    return j.dump();
  });
}

fosor_status fosor_gain(int n, const int* value_counts, char** out) {
  return guarded(out, FOSOR_USAGE, [&] {
    auto space = space_from(value_counts, n);
    json j;
    j["n"] = n;
    j["m"] = space.outcome_count();
    j["sigma"] = space.sigma();
    j["gain"] =
        fosor::gain_function(n, space.outcome_count(), space.sigma()).value.get_str();
    return j.dump();
  });
}

namespace {

fosor::FrequencyTable run_stats(const int* value_counts, int n,
                                long long repetitions, uint64_t seed,
                                int ulocal, int workers) {
  fosor::ExperimentConfig config{
      space_from(value_counts, n), repetitions, seed,
      ulocal ? fosor::OptimaKind::ULocalOptima : fosor::OptimaKind::LocalOptima,
      workers};
  return fosor::run_experiment(config);
}

}  // namespace

fosor_status fosor_stats_run(const int* value_counts, int n,
                             long long repetitions, uint64_t seed, int ulocal,
                             int workers, char** out) {
  return guarded(out, FOSOR_USAGE, [&] {
    auto table = run_stats(value_counts, n, repetitions, seed, ulocal, workers);
    json j;
    j["features"] = table.value_counts;
    j["repetitions"] = table.repetitions;
    j["seed"] = table.seed;
    j["kind"] = table.kind == fosor::OptimaKind::ULocalOptima ? "ulocal" : "local";
    j["workers"] = table.workers;
    j["rng"] = table.rng_id;
    j["wall_seconds"] = table.wall_seconds;
    json rows = json::array();
    for (auto [k, c] : table.counts)
      rows.push_back({{"k", k},
                      {"count", c},
                      {"frequency", static_cast<double>(c) /
                                        static_cast<double>(table.repetitions)}});
    j["rows"] = rows;
    return j.dump();
  });
}

fosor_status fosor_stats_csv(const int* value_counts, int n,
                             long long repetitions, uint64_t seed, int ulocal,
                             int workers, char** out) {
  return guarded(out, FOSOR_USAGE, [&] {
    return fosor::to_csv(run_stats(value_counts, n, repetitions, seed, ulocal, workers));
  });
}

fosor_status fosor_classical_baseline(int m, long long repetitions,
                                      uint64_t seed, int digits, char** out) {
  return guarded(out, FOSOR_USAGE, [&] {
    auto p = fosor::classical_baseline(m, repetitions, seed);
    json j;
    j["m"] = m;
    j["repetitions"] = repetitions;
    j["seed"] = seed;
    j["rational"] = p.value.get_str();
    j["decimal"] = p.decimal(digits);
    return j.dump();
  });
}

}  // extern "C"
