#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fosor {

// Domain-level failure (bad tuples, malformed rule files, size caps).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Maximum number of outcomes a rule may have; overridable with the
// FOSOR_MAX_M environment variable. Guards against accidental
// quadratic-memory blowups, since a rule stores an M x M bit matrix.
int max_outcomes();

// A bundle of n features, the i-th taking value_counts[i] >= 2 values.
// Immutable after construction.
class FeatureSpace {
 public:
  static FeatureSpace create(std::vector<int> value_counts);

  int feature_count() const { return static_cast<int>(counts_.size()); }
  int outcome_count() const { return outcome_count_; }
  // Sum of the value counts.
  int sigma() const { return sigma_; }
  const std::vector<int>& value_counts() const { return counts_; }

  // Mixed-radix index; the first feature is the most significant digit.
  int encode(std::span<const int> values) const;
  std::vector<int> decode(int index) const;

  bool operator==(const FeatureSpace&) const = default;

 private:
  FeatureSpace(std::vector<int> counts, int m, int sigma)
      : counts_(std::move(counts)), outcome_count_(m), sigma_(sigma) {}

  std::vector<int> counts_;
  int outcome_count_;
  int sigma_;
};

// A social outcome: a value tuple together with its canonical index.
struct Outcome {
  std::vector<int> values;
  int index;
};

Outcome make_outcome(const FeatureSpace& space, std::span<const int> values);
Outcome outcome_at(const FeatureSpace& space, int index);

// A set of feature indices (0-based internally), kept as a bit mask.
// Objects are identified with feature sets: an object containing one
// hyperplane of a feature contains all of that feature's hyperplanes.
class FeatureObject {
 public:
  FeatureObject() = default;
  explicit FeatureObject(uint32_t mask) : mask_(mask) {}
  // 1-based indices, as used in files and on the command line.
  static FeatureObject from_indices(const FeatureSpace& space,
                                    const std::vector<int>& one_based);

  uint32_t mask() const { return mask_; }
  bool contains(int feature) const { return (mask_ >> feature) & 1u; }
  std::vector<int> indices_one_based() const;
  bool operator==(const FeatureObject&) const = default;

 private:
  uint32_t mask_ = 0;
};

// A covering family of objects.
class ObjectsScheme {
 public:
  ObjectsScheme(const FeatureSpace& space, std::vector<FeatureObject> objects);

  const std::vector<FeatureObject>& objects() const { return objects_; }
  int size() const { return static_cast<int>(objects_.size()); }

 private:
  std::vector<FeatureObject> objects_;
};

// The order in which a scheme's objects are voted on; every object
// appears at least once. Indices are 0-based positions into the scheme.
class Agenda {
 public:
  Agenda(const ObjectsScheme& scheme, std::vector<int> order);

  const std::vector<int>& order() const { return order_; }
  int length() const { return static_cast<int>(order_.size()); }

 private:
  std::vector<int> order_;
};

// A strict complete social rule: an M x M antisymmetric dominance
// matrix, stored as packed bit rows. Immutable after construction.
class SocialRule {
 public:
  // entry (i, j) true iff outcome i beats outcome j.
  bool dominates(int i, int j) const {
    return (rows_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }

  const FeatureSpace& space() const { return space_; }
  int outcome_count() const { return space_.outcome_count(); }
  // Number of outcomes dominated by i.
  int score(int i) const;
  // Raw bit row of outcome i, outcome_count() bits wide.
  std::span<const uint64_t> row(int i) const {
    return {rows_.data() + static_cast<size_t>(i) * words_, words_};
  }

  bool operator==(const SocialRule& other) const {
    return space_ == other.space_ && rows_ == other.rows_;
  }

 private:
  friend class RuleBuilder;
  SocialRule(FeatureSpace space, size_t words, std::vector<uint64_t> rows)
      : space_(std::move(space)), words_(words), rows_(std::move(rows)) {}

  FeatureSpace space_;
  size_t words_;
  std::vector<uint64_t> rows_;
};

// Accumulates pairwise preferences, then validates completeness and
// strictness in build().
class RuleBuilder {
 public:
  explicit RuleBuilder(FeatureSpace space);

  // Declares winner > loser. Throws if the pair is already oriented
  // the other way.
  void prefer(int winner, int loser);
  bool oriented(int i, int j) const;
  SocialRule build() &&;

 private:
  FeatureSpace space_;
  size_t words_;
  std::vector<uint64_t> rows_;
  std::vector<uint64_t> decided_;
};

// Rule file format: a "features: m1 m2 ... mn" header, then M rows of
// M characters ('0'/'1' off the diagonal, '-' on it). Blank lines and
// '#' comments are ignored on parse; serialization is canonical.
SocialRule parse_rule(const std::string& text);
std::string serialize_rule(const SocialRule& rule);

// Scheme spec syntax: comma-separated objects, each a dash-joined
// 1-based feature list, e.g. "1-2,3" is {{1,2},{3}}.
ObjectsScheme parse_scheme_spec(const FeatureSpace& space, const std::string& spec);
std::string format_scheme_spec(const ObjectsScheme& scheme);

// Agenda spec: comma-separated 1-based object positions, e.g. "1,2,1".
Agenda parse_agenda_spec(const ObjectsScheme& scheme, const std::string& spec);

// Comma-separated outcome tuple, e.g. "0,1,1".
Outcome parse_outcome_spec(const FeatureSpace& space, const std::string& spec);

}  // namespace fosor
