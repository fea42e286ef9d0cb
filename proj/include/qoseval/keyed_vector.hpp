#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qoseval {

/// Dense vector whose entries are addressed by string keys (alternative,
/// application, parameter or RAN identifiers). Key order is significant for
/// printing but lookups and combination are by key.
template <typename Scalar>
struct KeyedVector {
  using Values = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  std::vector<std::string> keys;
  Values values;

  KeyedVector() = default;
  KeyedVector(std::vector<std::string> k, Values v) : keys(std::move(k)), values(std::move(v)) {
    if (static_cast<Eigen::Index>(keys.size()) != values.size()) {
      throw std::invalid_argument("keyed vector: key and value counts differ");
    }
  }
  KeyedVector(std::initializer_list<std::pair<std::string, Scalar>> entries) {
    values.resize(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const auto& [k, v] : entries) {
      keys.push_back(k);
      values(i++) = v;
    }
  }

  Eigen::Index size() const { return values.size(); }
  bool empty() const { return keys.empty(); }

  std::ptrdiff_t index_of(const std::string& key) const {
    auto it = std::find(keys.begin(), keys.end(), key);
    return it == keys.end() ? -1 : std::distance(keys.begin(), it);
  }
  bool contains(const std::string& key) const { return index_of(key) >= 0; }

  Scalar at(const std::string& key) const {
    const auto i = index_of(key);
    if (i < 0) throw std::out_of_range("no entry for key '" + key + "'");
    return values(i);
  }

  void push_back(std::string key, Scalar v) {
    keys.push_back(std::move(key));
    values.conservativeResize(values.size() + 1);
    values(values.size() - 1) = v;
  }

  friend bool operator==(const KeyedVector& a, const KeyedVector& b) {
    return a.keys == b.keys && a.values.size() == b.values.size() && (a.values.array() == b.values.array()).all();
  }
};

/// Normalized nonnegative weights keyed by alternative.
template <typename Scalar>
using WeightVector = KeyedVector<Scalar>;

template <typename Scalar>
bool is_normalized(const WeightVector<Scalar>& w, Scalar tol = Scalar(1e-9)) {
  return w.size() > 0 && (w.values.array() >= Scalar(0)).all() && std::abs(w.values.sum() - Scalar(1)) <= tol;
}

/// Divides every component by the sum. Rejects negative components and an all-zero vector.
template <typename Scalar>
WeightVector<Scalar> normalize(const WeightVector<Scalar>& w) {
  if (w.size() == 0) throw std::invalid_argument("cannot normalize an empty weight vector");
  if ((w.values.array() < Scalar(0)).any() || !w.values.allFinite()) {
    throw std::invalid_argument("weights must be finite and nonnegative");
  }
  const Scalar total = w.values.sum();
  if (!(total > Scalar(0))) throw std::invalid_argument("cannot normalize an all-zero weight vector");
  return {w.keys, w.values / total};
}

/// Reorders `v` so that its keys follow `order`. Throws when the key sets differ.
template <typename Scalar>
KeyedVector<Scalar> align(const KeyedVector<Scalar>& v, const std::vector<std::string>& order) {
  if (static_cast<Eigen::Index>(order.size()) != v.size()) {
    throw std::invalid_argument("key sets differ in size");
  }
  typename KeyedVector<Scalar>::Values out(v.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto j = v.index_of(order[i]);
    if (j < 0) throw std::invalid_argument("key '" + order[i] + "' missing from vector");
    out(static_cast<Eigen::Index>(i)) = v.values(j);
  }
  return {order, std::move(out)};
}

/// Sum over keys of weight * value; the key sets of both vectors must match.
template <typename Scalar>
Scalar weighted_sum(const KeyedVector<Scalar>& values, const WeightVector<Scalar>& weights) {
  if (values.size() != weights.size()) {
    throw std::invalid_argument("weighted sum: " + std::to_string(values.size()) + " values but " +
                                std::to_string(weights.size()) + " weights");
  }
  for (const auto& k : values.keys) {
    if (!weights.contains(k)) throw std::invalid_argument("weighted sum: no weight for '" + k + "'");
  }
  return align(values, weights.keys).values.dot(weights.values);
}

}  // namespace qoseval
