#pragma once

#include "qoseval/config.hpp"
#include "qoseval/fahp.hpp"
#include "qoseval/measurements.hpp"
#include "qoseval/qos_engine.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qoseval {

inline constexpr int kReportSchemaVersion = 1;

struct ParameterReport {
  Parameter parameter;
  double raw_mean;
  Unit unit;
  std::size_t samples;
  double score;
  double weight;

  friend bool operator==(const ParameterReport&, const ParameterReport&) = default;
};

struct ApplicationReport {
  std::string id;
  AppClass app_class;
  std::string category;
  std::int64_t users;
  /// True when the metric came from the configuration instead of measurements.
  bool injected;
  std::vector<ParameterReport> parameters;
  double metric;
  QosLevel level;
  double weight;

  friend bool operator==(const ApplicationReport&, const ApplicationReport&) = default;
};

/// Audit trail of one extent-analysis weight derivation.
struct MatrixReport {
  std::vector<std::string> alternatives;
  TfnMatrix<double> cells;
  std::vector<CriterionLayer<double>> criteria;
  std::vector<SyntheticExtent<double>> extents;
  WeightVector<double> raw_weights;
  WeightVector<double> weights;

  friend bool operator==(const MatrixReport&, const MatrixReport&) = default;
};

enum class WeightSource { extent_analysis, override_weights, single_application, uniform, users };

const char* to_string(WeightSource s);
std::optional<WeightSource> parse_weight_source(const std::string& s);

struct RanReport {
  std::string id;
  std::string technology;
  std::vector<ApplicationReport> applications;
  std::vector<std::string> excluded_applications;
  WeightSource weight_source;
  std::optional<MatrixReport> matrix;
  WeightVector<double> application_weights;
  double metric;
  QosLevel level;

  friend bool operator==(const RanReport&, const RanReport&) = default;
};

struct EvaluationReport {
  int schema_version = kReportSchemaVersion;
  std::string network_id;
  QosThresholds<double> thresholds;
  std::vector<RanReport> rans;
  WeightSource ran_weight_source = WeightSource::uniform;
  WeightVector<double> ran_weights;
  double metric = 0.0;
  QosLevel level = QosLevel::poor;
  std::vector<std::string> warnings;

  friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

/// Application weights for one RAN over the given applications (extent
/// analysis, explicit override, or 1 for a single application).
struct ApplicationWeighting {
  WeightSource source;
  std::optional<MatrixReport> matrix;
  WeightVector<double> weights;
};

ApplicationWeighting weigh_applications(const NetworkConfiguration& cfg, const RanConfig& ran,
                                        const std::vector<ApplicationContext>& present,
                                        std::vector<std::string>& warnings);

/// Runs the full pipeline. Throws ValidationError when a RAN has no
/// application with measurements or an injected metric.
EvaluationReport evaluate(const NetworkConfiguration& cfg, const MeasurementSet& measurements);

/// Recomputes every layer from the report's own weights and child metrics;
/// returns the largest absolute discrepancy.
double self_consistency_error(const EvaluationReport& report);

// ---------------------------------------------------------------------------
// What-if re-weighting.

/// "from <scale> to": application `from` judged k_scale over `to`.
struct ImportanceDirective {
  std::string from;
  int scale;
  std::string to;
};

ImportanceDirective parse_directive(const std::string& from, const std::string& scale_token, const std::string& to);

/// Configuration with the directive installed as a criterion-independent
/// judgment override (replacing earlier overrides of the same pair).
NetworkConfiguration apply_directive(const NetworkConfiguration& cfg, const ImportanceDirective& d,
                                     std::vector<std::string>& warnings);

enum class Layer { application, ran, network };

const char* to_string(Layer l);

/// Application rows track the application's weight; RAN and network rows track the metric.
struct MetricDelta {
  Layer layer;
  std::string ran;  // empty for the network layer
  std::string id;
  std::string quantity;
  double before;
  double after;
  double delta;
};

struct WhatIfResult {
  ImportanceDirective directive;
  EvaluationReport baseline;
  EvaluationReport modified;
  std::vector<MetricDelta> deltas;

  double network_delta() const { return modified.metric - baseline.metric; }
  bool unchanged(double tol = 1e-12) const;
};

WhatIfResult whatif(const NetworkConfiguration& cfg, const MeasurementSet& measurements,
                    const ImportanceDirective& directive);

}  // namespace qoseval
