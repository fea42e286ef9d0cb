#pragma once

#include "qoseval/fahp.hpp"
#include "qoseval/keyed_vector.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qoseval {

enum class Parameter { delay, jitter, packet_loss, throughput };
enum class Unit { ms, percent, kbps };
enum class Direction { lower_is_better, higher_is_better };
enum class QosLevel { poor, average, good };

inline const char* to_string(Parameter p) {
  switch (p) {
    case Parameter::delay: return "delay";
    case Parameter::jitter: return "jitter";
    case Parameter::packet_loss: return "packet-loss";
    case Parameter::throughput: return "throughput";
  }
  return "unknown";
}

inline const char* to_string(Unit u) {
  switch (u) {
    case Unit::ms: return "ms";
    case Unit::percent: return "percent";
    case Unit::kbps: return "kbps";
  }
  return "unknown";
}

inline const char* to_string(Direction d) {
  return d == Direction::lower_is_better ? "lower-is-better" : "higher-is-better";
}

inline const char* to_string(QosLevel l) {
  switch (l) {
    case QosLevel::poor: return "poor";
    case QosLevel::average: return "average";
    case QosLevel::good: return "good";
  }
  return "unknown";
}

inline std::optional<Parameter> parse_parameter(std::string_view s) {
  if (s == "delay") return Parameter::delay;
  if (s == "jitter") return Parameter::jitter;
  if (s == "packet-loss") return Parameter::packet_loss;
  if (s == "throughput") return Parameter::throughput;
  return std::nullopt;
}

inline std::optional<Unit> parse_unit(std::string_view s) {
  if (s == "ms") return Unit::ms;
  if (s == "percent") return Unit::percent;
  if (s == "kbps") return Unit::kbps;
  return std::nullopt;
}

inline std::optional<Direction> parse_direction(std::string_view s) {
  if (s == "lower-is-better") return Direction::lower_is_better;
  if (s == "higher-is-better") return Direction::higher_is_better;
  return std::nullopt;
}

inline std::optional<QosLevel> parse_level(std::string_view s) {
  if (s == "poor") return QosLevel::poor;
  if (s == "average") return QosLevel::average;
  if (s == "good") return QosLevel::good;
  return std::nullopt;
}

inline Unit expected_unit(Parameter p) {
  switch (p) {
    case Parameter::delay:
    case Parameter::jitter: return Unit::ms;
    case Parameter::packet_loss: return Unit::percent;
    case Parameter::throughput: return Unit::kbps;
  }
  return Unit::ms;
}

inline Direction natural_direction(Parameter p) {
  return p == Parameter::throughput ? Direction::higher_is_better : Direction::lower_is_better;
}

template <typename Scalar>
struct Measurement {
  Scalar value;
  Unit unit;
};

/// Acceptable range for one parameter: score 1 at or beyond `best`, 0 at or
/// beyond `worst`, linear in between.
template <typename Scalar>
struct ParameterProfile {
  Parameter parameter;
  Direction direction;
  Scalar best;
  Scalar worst;

  Unit unit() const { return expected_unit(parameter); }

  void validate() const {
    if (!std::isfinite(best) || !std::isfinite(worst)) {
      throw std::invalid_argument(std::string("profile for ") + to_string(parameter) + " has non-finite bounds");
    }
    const bool ordered = direction == Direction::lower_is_better ? best < worst : best > worst;
    if (!ordered) {
      throw std::invalid_argument(std::string("profile for ") + to_string(parameter) + ": best must be " +
                                  (direction == Direction::lower_is_better ? "below" : "above") + " worst");
    }
  }

  friend bool operator==(const ParameterProfile&, const ParameterProfile&) = default;
};

template <typename Scalar>
Scalar normalize_parameter(const Measurement<Scalar>& m, const ParameterProfile<Scalar>& profile) {
  profile.validate();
  if (!std::isfinite(m.value)) throw std::invalid_argument("measurement must be finite");
  if (m.value < Scalar(0)) throw std::invalid_argument("measurement must be nonnegative");
  if (m.unit != profile.unit()) {
    throw std::invalid_argument(std::string(to_string(profile.parameter)) + " expects unit " +
                                to_string(profile.unit()) + ", got " + to_string(m.unit));
  }
  const Scalar t = (profile.worst - m.value) / (profile.worst - profile.best);
  return std::clamp(t, Scalar(0), Scalar(1));
}

namespace detail {

template <typename Scalar>
void require_normalized(const WeightVector<Scalar>& w, const char* what) {
  if (!is_normalized(w, Scalar(1e-9))) {
    throw std::invalid_argument(std::string(what) + " weights must be nonnegative and sum to 1");
  }
}

template <typename Scalar>
void require_unit_interval(const KeyedVector<Scalar>& v, const char* what) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!(v.values(i) >= Scalar(0) && v.values(i) <= Scalar(1))) {
      throw std::invalid_argument(std::string(what) + " '" + v.keys[static_cast<std::size_t>(i)] +
                                  "' is outside [0,1]");
    }
  }
}

}  // namespace detail

/// QoSAM: weighted sum of per-parameter scores.
template <typename Scalar>
Scalar application_metric(const KeyedVector<Scalar>& scores, const WeightVector<Scalar>& weights) {
  detail::require_normalized(weights, "parameter");
  detail::require_unit_interval(scores, "parameter score");
  return std::clamp(weighted_sum(scores, weights), Scalar(0), Scalar(1));
}

/// QoSRM: weighted sum of application metrics over the active applications.
template <typename Scalar>
Scalar ran_metric(const KeyedVector<Scalar>& app_metrics, const WeightVector<Scalar>& app_weights) {
  detail::require_normalized(app_weights, "application");
  detail::require_unit_interval(app_metrics, "application metric");
  return std::clamp(weighted_sum(app_metrics, app_weights), Scalar(0), Scalar(1));
}

template <typename Scalar>
struct QosThresholds {
  Scalar good = Scalar(0.75);
  Scalar average = Scalar(0.5);

  void validate() const {
    if (!(Scalar(0) < average && average < good && good <= Scalar(1))) {
      throw std::invalid_argument("thresholds must satisfy 0 < average < good <= 1");
    }
  }
  friend bool operator==(const QosThresholds&, const QosThresholds&) = default;
};

template <typename Scalar>
struct Classification {
  QosLevel level;
  Scalar score;
};

template <typename Scalar>
Classification<Scalar> classify(Scalar score, const QosThresholds<Scalar>& t = {}) {
  t.validate();
  if (!(score >= Scalar(0) && score <= Scalar(1))) throw std::invalid_argument("score must lie in [0,1]");
  if (score >= t.good) return {QosLevel::good, score};
  if (score >= t.average) return {QosLevel::average, score};
  return {QosLevel::poor, score};
}

template <typename Scalar>
struct NetworkQos {
  KeyedVector<Scalar> ran_metrics;
  WeightVector<Scalar> ran_weights;
  Scalar metric;
  QosLevel level;
};

/// QoSCM: weighted sum of RAN metrics, classified.
template <typename Scalar>
NetworkQos<Scalar> network_metric(const KeyedVector<Scalar>& ran_metrics, const WeightVector<Scalar>& ran_weights,
                                  const QosThresholds<Scalar>& t = {}) {
  detail::require_normalized(ran_weights, "RAN");
  detail::require_unit_interval(ran_metrics, "RAN metric");
  const Scalar metric = std::clamp(weighted_sum(ran_metrics, ran_weights), Scalar(0), Scalar(1));
  return {ran_metrics, ran_weights, metric, classify(metric, t).level};
}

// ---------------------------------------------------------------------------
// Shipped defaults (deployment policy, overridable through configuration).

/// Default acceptable ranges for the "voice" and "video" profile families.
template <typename Scalar = double>
std::vector<ParameterProfile<Scalar>> default_profiles(std::string_view family) {
  using P = ParameterProfile<Scalar>;
  constexpr auto lower = Direction::lower_is_better;
  if (family == "voice") {
    return {P{Parameter::delay, lower, 150, 400}, P{Parameter::jitter, lower, 20, 60},
            P{Parameter::packet_loss, lower, 1, 10}};
  }
  if (family == "video") {
    return {P{Parameter::delay, lower, 250, 500}, P{Parameter::jitter, lower, 10, 40},
            P{Parameter::packet_loss, lower, 1, 8}};
  }
  return {};
}

/// Delay / packet-loss / jitter judgments: delay moderately over loss,
/// strongly over jitter; loss moderately over jitter.
template <typename Scalar = double>
FuzzyComparisonMatrix<Scalar> default_parameter_matrix() {
  TfnMatrix<Scalar> m(3);
  m.set(0, 1, scale<Scalar>(3));
  m.set(0, 2, scale<Scalar>(5));
  m.set(1, 2, scale<Scalar>(3));
  return FuzzyComparisonMatrix<Scalar>::from_upper_triangle(
      {to_string(Parameter::delay), to_string(Parameter::packet_loss), to_string(Parameter::jitter)}, m);
}

template <typename Scalar = double>
WeightVector<Scalar> default_parameter_weights() {
  return derive_weights(default_parameter_matrix<Scalar>());
}

}  // namespace qoseval
