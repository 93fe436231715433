/* C interface to the fosor engine: social rules over feature bundles,
 * tournament condensation, voting dynamics, universal basins of
 * attraction, exact counting and Monte Carlo statistics.
 *
 * Conventions:
 *  - Rules travel as opaque handles created by the parse/extremal
 *    constructors and released with fosor_rule_free.
 *  - Analysis results are JSON documents in heap strings owned by the
 *    caller; release them with fosor_string_free.
 *  - Outcome arguments are comma-separated value tuples ("0,1,1");
 *    scheme specs list dash-joined 1-based feature groups ("1-2,3");
 *    agenda specs are comma-separated 1-based object positions ("1,2,1").
 */
#ifndef FOSOR_H
#define FOSOR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fosor_rule fosor_rule;

typedef enum {
  FOSOR_OK = 0,
  FOSOR_USAGE = 1,     /* invalid argument values or specs */
  FOSOR_MALFORMED = 2, /* rule text failed to parse */
  FOSOR_INTERNAL = 3
} fosor_status;

/* Message describing the last failure on this thread. */
const char* fosor_last_error(void);

/* Rule file format: "features: m1 m2 ... mn" header, then M rows of M
 * characters, '-' on the diagonal, '1' at (i, j) iff outcome i beats j. */
fosor_status fosor_rule_parse(const char* text, fosor_rule** out);
fosor_status fosor_rule_serialize(const fosor_rule* rule, char** out_text);
/* A rule attaining the maximum number of local optima for the space. */
fosor_status fosor_rule_extremal(const int* value_counts, int n, fosor_rule** out);
void fosor_rule_free(fosor_rule* rule);
void fosor_string_free(char* s);

/* Irreducible components bottom-up plus the maximum component. */
fosor_status fosor_condense(const fosor_rule* rule, char** json);

/* Status of one outcome: free / local optimum for a scheme / global for
 * an agenda; bound >= 0 additionally runs the bounded all-agenda check
 * (requires a scheme). scheme and agenda may be NULL. */
fosor_status fosor_check(const fosor_rule* rule, const char* outcome,
                         const char* scheme, const char* agenda,
                         long long bound, char** json);

/* Rule-wide counts: free (= local) outcomes, u-local optima, existence. */
fosor_status fosor_summary(const fosor_rule* rule, char** json);

/* Universal basin of the outcome (strata, deepnesses, u-deepness); with
 * a scheme, the basin for that scheme; with scheme and agenda, the
 * basin for that agenda. */
fosor_status fosor_basin(const fosor_rule* rule, const char* outcome,
                         const char* scheme, const char* agenda, char** json);

/* An objects scheme and agenda with a verified maximal domination path
 * from one outcome ending up in the other, when one exists. */
fosor_status fosor_witness(const fosor_rule* rule, const char* from_outcome,
                           const char* to_outcome, char** json);

/* Exact counting; decimals use round-half-even rendering. */
fosor_status fosor_count_tournaments(int m, char** json);
fosor_status fosor_prob_irreducible(int m, int digits, char** json);
/* All counts/probabilities of rules on two features with k free outcomes. */
fosor_status fosor_count_free(int m1, int m2, int digits, char** json);
fosor_status fosor_gain(int n, const int* value_counts, char** json);

/* Seeded Monte Carlo frequency table of per-rule optima counts;
 * ulocal = 0 counts local optima, 1 counts u-local optima. The result
 * depends only on (space, repetitions, seed, ulocal). */
fosor_status fosor_stats_run(const int* value_counts, int n,
                             long long repetitions, uint64_t seed, int ulocal,
                             int workers, char** json);
fosor_status fosor_stats_csv(const int* value_counts, int n,
                             long long repetitions, uint64_t seed, int ulocal,
                             int workers, char** csv);

/* Empirical frequency of a dominant node in random tournaments. */
fosor_status fosor_classical_baseline(int m, long long repetitions,
                                      uint64_t seed, int digits, char** json);

#ifdef __cplusplus
}
#endif

#endif /* FOSOR_H */
