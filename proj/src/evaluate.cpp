#include "qoseval/evaluate.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>

namespace qoseval {

const char* to_string(WeightSource s) {
  switch (s) {
    case WeightSource::extent_analysis: return "extent-analysis";
    case WeightSource::override_weights: return "override";
    case WeightSource::single_application: return "single-application";
    case WeightSource::uniform: return "uniform";
    case WeightSource::users: return "users";
  }
  return "unknown";
}

std::optional<WeightSource> parse_weight_source(const std::string& s) {
  for (auto w : {WeightSource::extent_analysis, WeightSource::override_weights, WeightSource::single_application,
                 WeightSource::uniform, WeightSource::users}) {
    if (s == to_string(w)) return w;
  }
  return std::nullopt;
}

const char* to_string(Layer l) {
  switch (l) {
    case Layer::application: return "application";
    case Layer::ran: return "ran";
    case Layer::network: return "network";
  }
  return "unknown";
}

namespace {

/// Restricts `w` to `keys` (in that order) and renormalizes.
WeightVector<double> restrict_weights(const WeightVector<double>& w, const std::vector<std::string>& keys,
                                      const std::string& what) {
  WeightVector<double> out;
  for (const auto& k : keys) {
    if (!w.contains(k)) throw ValidationError(fmt::format("{}: no weight for '{}'", what, k));
    out.push_back(k, w.at(k));
  }
  if (!(out.values.sum() > 0.0)) throw ValidationError(fmt::format("{}: weights of present entries are all zero", what));
  return normalize(out);
}

ApplicationReport score_application(const NetworkConfiguration& cfg, const RanConfig& ran, const ApplicationConfig& app,
                                    const MeasurementSet& measurements, std::vector<std::string>& warnings) {
  ApplicationReport r{app.id, app.app_class, app.category, app.users, false, {}, 0.0, QosLevel::poor, 0.0};
  const auto& series = measurements.series(ran.id, app.id);
  if (app.qos_metric) {
    r.injected = true;
    r.metric = *app.qos_metric;
    if (!series.empty()) {
      warnings.push_back(fmt::format("{}/{}: injected metric takes precedence over measurements", ran.id, app.id));
    }
    r.level = classify(r.metric, cfg.thresholds).level;
    return r;
  }

  const std::string cls = to_string(app.app_class);
  const auto& weights = cfg.parameter_weights.at(cls);
  const auto profile_it = cfg.profiles.find(cls);

  KeyedVector<double> scores;
  WeightVector<double> used;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    const auto& name = weights.keys[static_cast<std::size_t>(i)];
    const auto parameter = *parse_parameter(name);
    auto measured = series.find(parameter);
    if (measured == series.end()) {
      warnings.push_back(fmt::format("{}/{}: no {} measurement; parameter dropped and weights renormalized", ran.id,
                                     app.id, name));
      continue;
    }
    if (profile_it == cfg.profiles.end() || !profile_it->second.contains(parameter)) {
      warnings.push_back(fmt::format("{}/{}: no {} profile for class {}; parameter dropped", ran.id, app.id, name, cls));
      continue;
    }
    const auto& agg = measured->second;
    const auto& profile = profile_it->second.at(parameter);
    const double score = normalize_parameter(Measurement<double>{agg.mean, agg.unit}, profile);
    scores.push_back(name, score);
    used.push_back(name, weights.values(i));
    r.parameters.push_back({parameter, agg.mean, agg.unit, agg.samples, score, weights.values(i)});
  }
  for (const auto& [parameter, agg] : series) {
    if (!weights.contains(to_string(parameter))) {
      warnings.push_back(
          fmt::format("{}/{}: {} is measured but carries no weight; ignored", ran.id, app.id, to_string(parameter)));
    }
  }
  if (used.empty() || !(used.values.sum() > 0.0)) {
    throw ValidationError(fmt::format("application '{}' in RAN '{}' has no scorable parameters", app.id, ran.id));
  }
  used = normalize(used);
  for (std::size_t i = 0; i < r.parameters.size(); ++i) r.parameters[i].weight = used.values(static_cast<Eigen::Index>(i));
  r.metric = application_metric(scores, used);
  r.level = classify(r.metric, cfg.thresholds).level;
  return r;
}

}  // namespace

ApplicationWeighting weigh_applications(const NetworkConfiguration& cfg, const RanConfig& ran,
                                        const std::vector<ApplicationContext>& present,
                                        std::vector<std::string>& warnings) {
  std::vector<std::string> ids;
  ids.reserve(present.size());
  for (const auto& a : present) ids.push_back(a.id);

  if (ran.application_weights) {
    if (ran.application_weights->size() != static_cast<Eigen::Index>(ids.size())) {
      warnings.push_back(fmt::format("{}: explicit application weights renormalized over present applications", ran.id));
    }
    return {WeightSource::override_weights, std::nullopt,
            restrict_weights(*ran.application_weights, ids, fmt::format("RAN '{}' application weights", ran.id))};
  }
  if (present.size() == 1) {
    WeightVector<double> w;
    w.push_back(ids.front(), 1.0);
    return {WeightSource::single_application, std::nullopt, w};
  }

  FuzzyComparisonMatrix<double> matrix;
  ExtentAnalysis<double> analysis;
  try {
    matrix = build_application_matrix(present, cfg.weight_rules);
    analysis = extent_analysis(matrix);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(fmt::format("RAN '{}': {}", ran.id, e.what()));
  }
  for (Eigen::Index i = 0; i < analysis.weights.size(); ++i) {
    if (analysis.weights.values(i) == 0.0) {
      warnings.push_back(fmt::format("{}: application '{}' received weight 0 from extent analysis", ran.id,
                                     analysis.weights.keys[static_cast<std::size_t>(i)]));
    }
  }
  MatrixReport m{matrix.alternatives(), matrix.cells(), matrix.criteria(), analysis.extents, analysis.raw,
                 analysis.weights};
  return {WeightSource::extent_analysis, std::move(m), analysis.weights};
}

EvaluationReport evaluate(const NetworkConfiguration& cfg, const MeasurementSet& measurements) {
  EvaluationReport report;
  report.network_id = cfg.network_id;
  report.thresholds = cfg.thresholds;

  KeyedVector<double> ran_metrics;
  for (const auto& ran : cfg.rans) {
    RanReport rr;
    rr.id = ran.id;
    rr.technology = ran.technology;

    std::vector<ApplicationContext> present;
    for (const auto& app : ran.applications) {
      if (app.qos_metric || measurements.has(ran.id, app.id)) {
        present.push_back({app.id, app.category, app.users});
        rr.applications.push_back(score_application(cfg, ran, app, measurements, report.warnings));
      } else {
        rr.excluded_applications.push_back(app.id);
        report.warnings.push_back(fmt::format("{}/{}: no measurements; excluded from weighting", ran.id, app.id));
      }
    }
    if (present.empty()) throw ValidationError(fmt::format("RAN '{}' has no measured applications", ran.id));

    auto weighting = weigh_applications(cfg, ran, present, report.warnings);
    rr.weight_source = weighting.source;
    rr.matrix = std::move(weighting.matrix);
    rr.application_weights = std::move(weighting.weights);

    KeyedVector<double> app_metrics;
    for (auto& a : rr.applications) {
      a.weight = rr.application_weights.at(a.id);
      app_metrics.push_back(a.id, a.metric);
    }
    rr.metric = ran_metric(app_metrics, rr.application_weights);
    rr.level = classify(rr.metric, cfg.thresholds).level;
    ran_metrics.push_back(rr.id, rr.metric);
    report.rans.push_back(std::move(rr));
  }

  std::vector<std::string> ran_ids = ran_metrics.keys;
  if (cfg.ran_weights) {
    report.ran_weight_source = WeightSource::override_weights;
    report.ran_weights = restrict_weights(*cfg.ran_weights, ran_ids, "RAN weights");
  } else {
    WeightVector<double> w;
    double total_users = 0.0;
    if (cfg.ran_weighting == RanWeighting::users) {
      for (const auto& rr : report.rans) {
        double users = 0.0;
        for (const auto& a : rr.applications) users += static_cast<double>(a.users);
        w.push_back(rr.id, users);
        total_users += users;
      }
    }
    if (cfg.ran_weighting == RanWeighting::users && total_users > 0.0) {
      report.ran_weight_source = WeightSource::users;
      report.ran_weights = normalize(w);
    } else {
      if (cfg.ran_weighting == RanWeighting::users) {
        report.warnings.push_back("no active users in any RAN; RAN weights fall back to uniform");
      }
      report.ran_weight_source = WeightSource::uniform;
      WeightVector<double> uniform;
      for (const auto& id : ran_ids) uniform.push_back(id, 1.0);
      report.ran_weights = normalize(uniform);
    }
  }

  const auto network = network_metric(ran_metrics, report.ran_weights, cfg.thresholds);
  report.metric = network.metric;
  report.level = network.level;
  return report;
}

double self_consistency_error(const EvaluationReport& report) {
  double worst = 0.0;
  auto track = [&](double a, double b) { worst = std::max(worst, std::abs(a - b)); };
  double ran_sum = 0.0;
  double ran_weight_sum = 0.0;
  for (const auto& rr : report.rans) {
    double app_sum = 0.0;
    double app_weight_sum = 0.0;
    for (const auto& a : rr.applications) {
      if (!a.injected) {
        double s = 0.0;
        double wsum = 0.0;
        for (const auto& p : a.parameters) {
          s += p.weight * p.score;
          wsum += p.weight;
        }
        track(s, a.metric);
        track(wsum, 1.0);
      }
      track(a.weight, rr.application_weights.contains(a.id) ? rr.application_weights.at(a.id) : -1.0);
      app_sum += a.weight * a.metric;
      app_weight_sum += a.weight;
    }
    track(app_sum, rr.metric);
    track(app_weight_sum, 1.0);
    const double w = report.ran_weights.contains(rr.id) ? report.ran_weights.at(rr.id) : 0.0;
    ran_sum += w * rr.metric;
    ran_weight_sum += w;
  }
  track(ran_sum, report.metric);
  track(ran_weight_sum, 1.0);
  return worst;
}

ImportanceDirective parse_directive(const std::string& from, const std::string& scale_token, const std::string& to) {
  auto index = parse_scale(scale_token);
  if (!index) throw ValidationError(fmt::format("unknown importance scale '{}'", scale_token));
  if (from == to) throw ValidationError("a directive must compare two different applications");
  return {from, *index, to};
}

NetworkConfiguration apply_directive(const NetworkConfiguration& cfg, const ImportanceDirective& d,
                                     std::vector<std::string>& warnings) {
  if (!cfg.has_application(d.from)) throw ValidationError(fmt::format("unknown application '{}'", d.from));
  if (!cfg.has_application(d.to)) throw ValidationError(fmt::format("unknown application '{}'", d.to));
  NetworkConfiguration out = cfg;
  auto& overrides = out.weight_rules.overrides;
  overrides.erase(std::remove_if(overrides.begin(), overrides.end(),
                                 [&](const JudgmentOverride& o) {
                                   return (o.from == d.from && o.to == d.to) || (o.from == d.to && o.to == d.from);
                                 }),
                  overrides.end());
  overrides.push_back({std::nullopt, d.from, d.to, scale(d.scale)});
  for (auto& ran : out.rans) {
    if (ran.application_weights && ran.find(d.from) && ran.find(d.to)) {
      ran.application_weights.reset();
      warnings.push_back(
          fmt::format("{}: explicit application weights replaced by extent analysis for the directive", ran.id));
    }
  }
  return out;
}

bool WhatIfResult::unchanged(double tol) const {
  return std::all_of(deltas.begin(), deltas.end(), [&](const MetricDelta& d) { return std::abs(d.delta) <= tol; });
}

WhatIfResult whatif(const NetworkConfiguration& cfg, const MeasurementSet& measurements,
                    const ImportanceDirective& directive) {
  std::vector<std::string> notes;
  const auto modified_cfg = apply_directive(cfg, directive, notes);
  WhatIfResult result{directive, evaluate(cfg, measurements), evaluate(modified_cfg, measurements), {}};
  result.modified.warnings.insert(result.modified.warnings.end(), notes.begin(), notes.end());

  for (std::size_t r = 0; r < result.baseline.rans.size(); ++r) {
    const auto& before = result.baseline.rans[r];
    const auto& after = result.modified.rans[r];
    for (std::size_t a = 0; a < before.applications.size(); ++a) {
      const auto& ab = before.applications[a];
      const auto& aa = after.applications[a];
      result.deltas.push_back({Layer::application, before.id, ab.id, "weight", ab.weight, aa.weight, aa.weight - ab.weight});
    }
    result.deltas.push_back({Layer::ran, before.id, before.id, "metric", before.metric, after.metric,
                             after.metric - before.metric});
  }
  result.deltas.push_back({Layer::network, {}, result.baseline.network_id, "metric", result.baseline.metric,
                           result.modified.metric, result.modified.metric - result.baseline.metric});
  return result;
}

}  // namespace qoseval
