// Copyright 2026 The balcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "balcap/domain.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "balcap/error.hpp"

namespace balcap {

namespace {

std::string describe(const GroundSet& ground, Subset s) { return "{" + ground.key(s) + "}"; }

}  // namespace

Subset Subset::of(std::initializer_list<int> points) {
  std::uint32_t mask = 0;
  for (int p : points) mask |= std::uint32_t{1} << p;
  return Subset(mask);
}

std::vector<int> Subset::points() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorKind::kBadGround, "ground set must have at least one point");
  if (labels_.size() > static_cast<std::size_t>(kHardMaxPoints)) {
    throw Error(ErrorKind::kGroundTooLarge,
                "ground set has " + std::to_string(labels_.size()) + " points; hard limit is " +
                    std::to_string(kHardMaxPoints));
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw Error(ErrorKind::kBadGround, "empty point label");
    if (label.find(',') != std::string::npos) {
      throw Error(ErrorKind::kBadGround, "point label '" + label + "' contains ','");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::kBadGround, "duplicate point label '" + label + "'");
    }
  }
}

GroundSet GroundSet::numbered(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::string GroundSet::key(Subset s) const {
  std::string out;
  for (int p : s.points()) {
    if (!out.empty()) out += ',';
    out += labels_.at(p);
  }
  return out;
}

Subset GroundSet::parse_key(std::string_view key) const {
  Subset s;
  if (key.empty()) return s;
  std::size_t start = 0;
  while (true) {
    const auto comma = key.find(',', start);
    const auto label = key.substr(start, comma == std::string_view::npos ? key.npos : comma - start);
    const auto point = index_of(label);
    if (!point) throw Error(ErrorKind::kParse, "unknown label '" + std::string(label) + "'");
    if (s.contains(*point)) {
      throw Error(ErrorKind::kParse, "label '" + std::string(label) + "' repeated in subset key");
    }
    s = s | Subset::singleton(*point);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

void check_dense_size(const GroundSet& ground, int max_points) {
  const int cap = std::min(max_points, kHardMaxPoints);
  if (ground.size() > cap) {
    throw Error(ErrorKind::kGroundTooLarge, "ground set has " + std::to_string(ground.size()) +
                                                " points; the dense-table cap is " +
                                                std::to_string(cap) + " (see --max-n)");
  }
}

void require_same_ground(const GroundSet& a, const GroundSet& b) {
  if (!(a == b)) throw Error(ErrorKind::kGroundMismatch, "operands live on different ground sets");
}

Capacity Capacity::from_values(GroundSet ground, std::vector<Rational> values, int max_points) {
  check_dense_size(ground, max_points);
  if (values.size() != ground.subset_count()) {
    throw Error(ErrorKind::kMissingEntry,
                "capacity table has " + std::to_string(values.size()) + " entries, expected " +
                    std::to_string(ground.subset_count()));
  }
  const Subset full = ground.full();
  if (values.front() != 0) {
    throw Error(ErrorKind::kEmptyNotZero, "EmptyNotZero: value of {} is " +
                                              to_string(values.front()) + ", must be 0");
  }
  if (values[full.mask()] != 1) {
    throw Error(ErrorKind::kFullNotOne, "FullNotOne: value of " + describe(ground, full) + " is " +
                                            to_string(values[full.mask()]) + ", must be 1");
  }
  for (std::uint32_t m = 0; m <= full.mask(); ++m) {
    if (values[m] < 0 || values[m] > 1) {
      throw Error(ErrorKind::kOutOfRange, "OutOfRange: value of " + describe(ground, Subset(m)) +
                                              " is " + to_string(values[m]) + ", outside [0,1]");
    }
  }
  // Monotonicity over the covering pairs S < S + {x} implies it for all pairs.
  for (std::uint32_t m = 0; m <= full.mask(); ++m) {
    for (int p = 0; p < ground.size(); ++p) {
      const std::uint32_t bigger = m | (std::uint32_t{1} << p);
      if (bigger != m && values[m] > values[bigger]) {
        throw Error(ErrorKind::kNotMonotone,
                    "NotMonotone: " + describe(ground, Subset(m)) + " is contained in " +
                        describe(ground, Subset(bigger)) + " but " + to_string(values[m]) +
                        " > " + to_string(values[bigger]));
      }
    }
  }
  return Capacity(std::move(ground), std::move(values));
}

Capacity validate_capacity(const std::map<Subset, Rational>& table, const GroundSet& ground,
                           int max_points) {
  check_dense_size(ground, max_points);
  std::vector<Rational> values(ground.subset_count());
  for (std::uint32_t m = 0; m < values.size(); ++m) {
    const auto it = table.find(Subset(m));
    if (it == table.end()) {
      throw Error(ErrorKind::kMissingEntry,
                  "MissingEntry: no value for subset {" + ground.key(Subset(m)) + "}");
    }
    values[m] = it->second;
  }
  if (table.size() != values.size()) {
    throw Error(ErrorKind::kMissingEntry, "table contains subsets outside the ground set");
  }
  return Capacity::from_values(ground, std::move(values), max_points);
}

GeneratedCapacity::GeneratedCapacity(GroundSet ground, std::vector<Generator> generators)
    : ground_(std::move(ground)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.set.empty()) throw Error(ErrorKind::kBadGenerator, "generator set is empty");
    if (!g.set.is_subset_of(ground_.full())) {
      throw Error(ErrorKind::kBadGenerator, "generator set exceeds the ground set");
    }
    if (g.value <= 0 || g.value > 1) {
      throw Error(ErrorKind::kBadGenerator,
                  "generator value " + to_string(g.value) + " outside (0,1]");
    }
  }
}

Rational GeneratedCapacity::operator()(Subset s) const {
  if (s == ground_.full()) return Rational(1);
  Rational best(0);
  for (const auto& g : generators_) {
    if (g.set.is_subset_of(s) && g.value > best) best = g.value;
  }
  return best;
}

Capacity realize(const GeneratedCapacity& generated, int max_points) {
  const GroundSet& ground = generated.ground();
  check_dense_size(ground, max_points);
  std::vector<Rational> values(ground.subset_count());
  for (const auto& g : generated.generators()) {
    if (g.value > values[g.set.mask()]) values[g.set.mask()] = g.value;
  }
  // Upward max-closure along one coordinate at a time.
  for (int p = 0; p < ground.size(); ++p) {
    const std::uint32_t bit = std::uint32_t{1} << p;
    for (std::uint32_t m = 0; m < values.size(); ++m) {
      if ((m & bit) != 0 && values[m ^ bit] > values[m]) values[m] = values[m ^ bit];
    }
  }
  values[ground.full().mask()] = 1;
  return Capacity::from_values(ground, std::move(values), max_points);
}

ProbMeasure::ProbMeasure(GroundSet ground, std::vector<Rational> weights)
    : ground_(std::move(ground)), weights_(std::move(weights)) {
  if (weights_.size() != static_cast<std::size_t>(ground_.size())) {
    throw Error(ErrorKind::kDimensionMismatch, "measure needs one weight per point");
  }
  Rational total(0);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0) {
      throw Error(ErrorKind::kNotProbability,
                  "negative weight at point '" + ground_.label(static_cast<int>(i)) + "'");
    }
    total += weights_[i];
  }
  if (total != 1) {
    throw Error(ErrorKind::kNotProbability, "weights sum to " + to_string(total) + ", not 1");
  }
}

ProbMeasure ProbMeasure::point_mass(GroundSet ground, int point) {
  if (point < 0 || point >= ground.size()) {
    throw Error(ErrorKind::kBadPoint, "point index " + std::to_string(point) + " out of range");
  }
  std::vector<Rational> w(ground.size());
  w[point] = 1;
  return ProbMeasure(std::move(ground), std::move(w));
}

ProbMeasure ProbMeasure::uniform(GroundSet ground) {
  const Subset all = ground.full();
  return uniform_on(std::move(ground), all);
}

ProbMeasure ProbMeasure::uniform_on(GroundSet ground, Subset support) {
  if (support.empty() || !support.is_subset_of(ground.full())) {
    throw Error(ErrorKind::kNotProbability, "uniform measure needs a nonempty support");
  }
  std::vector<Rational> w(ground.size());
  const Rational share = make_rational(1, support.size());
  for (int p : support.points()) w[p] = share;
  return ProbMeasure(std::move(ground), std::move(w));
}

Rational measure_of(const ProbMeasure& mu, Subset s) {
  Rational total(0);
  for (int p : s.points()) total += mu.weight(p);
  return total;
}

Capacity as_capacity(const ProbMeasure& mu, int max_points) {
  check_dense_size(mu.ground(), max_points);
  std::vector<Rational> values(mu.ground().subset_count());
  for (std::uint32_t m = 1; m < values.size(); ++m) {
    const int low = std::countr_zero(m);
    values[m] = values[m & (m - 1)] + mu.weight(low);
  }
  return Capacity::from_values(mu.ground(), std::move(values), max_points);
}

Capacity mix(const Capacity& a, const Capacity& b, const Rational& t) {
  require_same_ground(a.ground(), b.ground());
  if (t < 0 || t > 1) throw Error(ErrorKind::kOutOfRange, "mixing weight outside [0,1]");
  std::vector<Rational> values(a.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = t * a.values()[i] + (1 - t) * b.values()[i];
  }
  return Capacity::from_values(a.ground(), std::move(values), kHardMaxPoints);
}

FuncOnX FuncOnX::constant(GroundSet ground, const Rational& c) {
  std::vector<Rational> v(ground.size(), c);
  return FuncOnX{std::move(ground), std::move(v)};
}

FuncOnX FuncOnX::indicator(GroundSet ground, Subset s, const Rational& height) {
  std::vector<Rational> v(ground.size());
  for (int p : s.points()) v.at(p) = height;
  return FuncOnX{std::move(ground), std::move(v)};
}

Subset FuncOnX::level_set(const Rational& t) const {
  std::uint32_t mask = 0;
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (values[p] >= t) mask |= std::uint32_t{1} << p;
  }
  return Subset(mask);
}

bool comonotone(const FuncOnX& f, const FuncOnX& g) {
  require_same_ground(f.ground, g.ground);
  const std::size_t n = f.values.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((f.values[i] - f.values[j]) * (g.values[i] - g.values[j]) < 0) return false;
    }
  }
  return true;
}

}  // namespace balcap
