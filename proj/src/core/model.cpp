#include "core/model.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

namespace fosor {

int max_outcomes() {
  static const int cap = [] {
    if (const char* env = std::getenv("FOSOR_MAX_M")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    return 4096;
  }();
  return cap;
}

FeatureSpace FeatureSpace::create(std::vector<int> value_counts) {
  if (value_counts.empty()) throw DomainError("feature space needs at least one feature");
  long long m = 1;
  long long sigma = 0;
  for (int c : value_counts) {
    if (c < 2) throw DomainError("every feature must take at least 2 values");
    m *= c;
    sigma += c;
    if (m > max_outcomes())
      throw DomainError("outcome count exceeds FOSOR_MAX_M (" +
                        std::to_string(max_outcomes()) + ")");
  }
  return FeatureSpace(std::move(value_counts), static_cast<int>(m),
                      static_cast<int>(sigma));
}

int FeatureSpace::encode(std::span<const int> values) const {
  if (static_cast<int>(values.size()) != feature_count())
    throw DomainError("outcome tuple has wrong length");
  int idx = 0;
  for (int i = 0; i < feature_count(); ++i) {
    if (values[i] < 0 || values[i] >= counts_[i])
      throw DomainError("feature value out of range");
    idx = idx * counts_[i] + values[i];
  }
  return idx;
}

std::vector<int> FeatureSpace::decode(int index) const {
  if (index < 0 || index >= outcome_count_) throw DomainError("outcome index out of range");
  std::vector<int> values(counts_.size());
  for (int i = feature_count() - 1; i >= 0; --i) {
    values[i] = index % counts_[i];
    index /= counts_[i];
  }
  return values;
}

Outcome make_outcome(const FeatureSpace& space, std::span<const int> values) {
  return Outcome{{values.begin(), values.end()}, space.encode(values)};
}

Outcome outcome_at(const FeatureSpace& space, int index) {
  return Outcome{space.decode(index), index};
}

FeatureObject FeatureObject::from_indices(const FeatureSpace& space,
                                          const std::vector<int>& one_based) {
  if (one_based.empty()) throw DomainError("object must contain at least one feature");
  uint32_t mask = 0;
  for (int f : one_based) {
    if (f < 1 || f > space.feature_count())
      throw DomainError("feature index out of range: " + std::to_string(f));
    mask |= 1u << (f - 1);
  }
  return FeatureObject(mask);
}

std::vector<int> FeatureObject::indices_one_based() const {
  std::vector<int> out;
  for (int f = 0; f < 32; ++f)
    if ((mask_ >> f) & 1u) out.push_back(f + 1);
  return out;
}

ObjectsScheme::ObjectsScheme(const FeatureSpace& space,
                             std::vector<FeatureObject> objects)
    : objects_(std::move(objects)) {
  if (objects_.empty()) throw DomainError("objects scheme must contain at least one object");
  uint32_t all = (space.feature_count() == 32)
                     ? ~0u
                     : ((1u << space.feature_count()) - 1);
  uint32_t covered = 0;
  for (const auto& obj : objects_) {
    if (obj.mask() == 0 || (obj.mask() & ~all))
      throw DomainError("object with empty or out-of-range feature set");
    covered |= obj.mask();
  }
  if (covered != all) throw DomainError("objects scheme does not cover all features");
}

Agenda::Agenda(const ObjectsScheme& scheme, std::vector<int> order)
    : order_(std::move(order)) {
  int k = scheme.size();
  if (static_cast<int>(order_.size()) < k)
    throw DomainError("agenda must be at least as long as the scheme");
  std::vector<char> seen(k, 0);
  for (int h : order_) {
    if (h < 0 || h >= k) throw DomainError("agenda references an object outside the scheme");
    seen[h] = 1;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw DomainError("agenda must use every object of the scheme");
}

int SocialRule::score(int i) const {
  int s = 0;
  for (uint64_t w : row(i)) s += std::popcount(w);
  return s;
}

RuleBuilder::RuleBuilder(FeatureSpace space) : space_(std::move(space)) {
  size_t m = static_cast<size_t>(space_.outcome_count());
  words_ = (m + 63) / 64;
  rows_.assign(m * words_, 0);
  decided_.assign(m * words_, 0);
}

void RuleBuilder::prefer(int winner, int loser) {
  int m = space_.outcome_count();
  if (winner < 0 || winner >= m || loser < 0 || loser >= m)
    throw DomainError("outcome index out of range");
  if (winner == loser) throw DomainError("an outcome cannot dominate itself");
  auto bit = [&](std::vector<uint64_t>& v, int i, int j) -> uint64_t& {
    return v[static_cast<size_t>(i) * words_ + (j >> 6)];
  };
  uint64_t wl = 1ull << (loser & 63);
  uint64_t lw = 1ull << (winner & 63);
  if (bit(decided_, loser, winner) & lw) {
    bool existing = bit(rows_, winner, loser) & wl;
    if (!existing) throw DomainError("conflicting preference: pair already oriented");
    return;
  }
  bit(decided_, winner, loser) |= wl;
  bit(decided_, loser, winner) |= lw;
  bit(rows_, winner, loser) |= wl;
}

bool RuleBuilder::oriented(int i, int j) const {
  return (decided_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
}

SocialRule RuleBuilder::build() && {
  int m = space_.outcome_count();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!oriented(i, j))
        throw DomainError("incomplete rule: pair (" + std::to_string(i) + "," +
                          std::to_string(j) + ") has no orientation");
  return SocialRule(std::move(space_), words_, std::move(rows_));
}

namespace {

std::vector<std::string> significant_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

SocialRule parse_rule(const std::string& text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw DomainError("empty rule file");
  const std::string header = "features:";
  if (lines[0].rfind(header, 0) != 0)
    throw DomainError("rule file must start with a 'features:' header");
  std::istringstream hs(lines[0].substr(header.size()));
  std::vector<int> counts;
  int v;
  while (hs >> v) counts.push_back(v);
  if (!hs.eof()) throw DomainError("malformed 'features:' header");
  FeatureSpace space = FeatureSpace::create(std::move(counts));
  int m = space.outcome_count();
  if (static_cast<int>(lines.size()) != m + 1)
    throw DomainError("expected " + std::to_string(m) + " matrix rows, found " +
                      std::to_string(static_cast<int>(lines.size()) - 1));

  RuleBuilder builder(space);
  for (int i = 0; i < m; ++i) {
    const std::string& row = lines[i + 1];
    if (static_cast<int>(row.size()) != m)
      throw DomainError("matrix row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < m; ++j) {
      char c = row[j];
      if (i == j) {
        if (c != '-') throw DomainError("diagonal entries must be '-'");
        continue;
      }
      if (c == '1')
        builder.prefer(i, j);
      else if (c != '0')
        throw DomainError("matrix entries must be '0', '1' or '-'");
    }
  }
  // prefer() rejects 1/1 conflicts; an all-zero pair fails in build().
  return std::move(builder).build();
}

std::string serialize_rule(const SocialRule& rule) {
  std::ostringstream out;
  out << "features:";
  for (int c : rule.space().value_counts()) out << ' ' << c;
  out << '\n';
  int m = rule.outcome_count();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      out << (i == j ? '-' : (rule.dominates(i, j) ? '1' : '0'));
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DomainError(std::string("malformed ") + what + ": '" + s + "'");
  }
}

}  // namespace

ObjectsScheme parse_scheme_spec(const FeatureSpace& space, const std::string& spec) {
  std::vector<FeatureObject> objects;
  for (const auto& part : split(spec, ',')) {
    std::vector<int> features;
    for (const auto& tok : split(part, '-'))
      features.push_back(parse_int(tok, "scheme spec"));
    objects.push_back(FeatureObject::from_indices(space, features));
  }
  return ObjectsScheme(space, std::move(objects));
}

std::string format_scheme_spec(const ObjectsScheme& scheme) {
  std::string out;
  for (const auto& obj : scheme.objects()) {
    if (!out.empty()) out += ',';
    bool first = true;
    for (int f : obj.indices_one_based()) {
      if (!first) out += '-';
      out += std::to_string(f);
      first = false;
    }
  }
  return out;
}

Agenda parse_agenda_spec(const ObjectsScheme& scheme, const std::string& spec) {
  std::vector<int> order;
  for (const auto& tok : split(spec, ','))
    order.push_back(parse_int(tok, "agenda spec") - 1);
  return Agenda(scheme, std::move(order));
}

Outcome parse_outcome_spec(const FeatureSpace& space, const std::string& spec) {
  std::vector<int> values;
  for (const auto& tok : split(spec, ','))
    values.push_back(parse_int(tok, "outcome tuple"));
  return make_outcome(space, values);
}

}  // namespace fosor
