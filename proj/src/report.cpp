#include "qoseval/report.hpp"

#include <fmt/core.h>

#include <algorithm>

namespace qoseval {

using nlohmann::json;

namespace {

json tfn_json(const Tfn<double>& t) { return json::array({t.lower(), t.modal(), t.upper()}); }

json keyed_json(const KeyedVector<double>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back({{"id", v.keys[static_cast<std::size_t>(i)]}, {"value", v.values(i)}});
  }
  return out;
}

json cells_json(const TfnMatrix<double>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.size(); ++j) row.push_back({m.lower(i, j), m.modal(i, j), m.upper(i, j)});
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_json(const MatrixReport& m) {
  json criteria = json::array();
  for (const auto& c : m.criteria) criteria.push_back({{"name", c.name}, {"cells", cells_json(c.judgments)}});
  json extents = json::array();
  for (const auto& e : m.extents) extents.push_back({{"id", e.alternative}, {"tfn", tfn_json(e.extent)}});
  return {{"alternatives", m.alternatives}, {"cells", cells_json(m.cells)}, {"criteria", std::move(criteria)},
          {"extents", std::move(extents)},  {"raw_weights", keyed_json(m.raw_weights)},
          {"weights", keyed_json(m.weights)}};
}

// --- parsing helpers ------------------------------------------------------

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw ValidationError(fmt::format("report: expected an object holding '{}'", key));
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(fmt::format("report: missing field '{}'", key));
  return *it;
}

template <typename T>
T get(const json& obj, const char* key) {
  try {
    return field(obj, key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(fmt::format("report: field '{}': {}", key, e.what()));
  }
}

template <typename Enum, typename Parser>
Enum get_enum(const json& obj, const char* key, Parser parse) {
  const auto name = get<std::string>(obj, key);
  auto v = parse(name);
  if (!v) throw ValidationError(fmt::format("report: field '{}' has unknown value '{}'", key, name));
  return *v;
}

KeyedVector<double> keyed_from(const json& arr) {
  if (!arr.is_array()) throw ValidationError("report: expected an array of {id, value}");
  KeyedVector<double> v;
  for (const auto& e : arr) v.push_back(get<std::string>(e, "id"), get<double>(e, "value"));
  return v;
}

Tfn<double> tfn_from(const json& arr) {
  if (!arr.is_array() || arr.size() != 3) throw ValidationError("report: expected [l, m, u]");
  try {
    return {arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>()};
  } catch (const std::exception& e) {
    throw ValidationError(fmt::format("report: invalid TFN: {}", e.what()));
  }
}

TfnMatrix<double> cells_from(const json& rows) {
  if (!rows.is_array()) throw ValidationError("report: expected a matrix of cells");
  const auto n = static_cast<Eigen::Index>(rows.size());
  TfnMatrix<double> m(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ValidationError("report: matrix rows must be square");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& c = row[static_cast<std::size_t>(j)];
      if (!c.is_array() || c.size() != 3) throw ValidationError("report: matrix cells must be [l, m, u]");
      m.lower(i, j) = c[0].get<double>();
      m.modal(i, j) = c[1].get<double>();
      m.upper(i, j) = c[2].get<double>();
    }
  }
  return m;
}

MatrixReport matrix_from(const json& j) {
  MatrixReport m;
  m.alternatives = get<std::vector<std::string>>(j, "alternatives");
  m.cells = cells_from(field(j, "cells"));
  for (const auto& c : field(j, "criteria")) m.criteria.push_back({get<std::string>(c, "name"), cells_from(field(c, "cells"))});
  for (const auto& e : field(j, "extents")) m.extents.push_back({get<std::string>(e, "id"), tfn_from(field(e, "tfn"))});
  m.raw_weights = keyed_from(field(j, "raw_weights"));
  m.weights = keyed_from(field(j, "weights"));
  return m;
}

// --- text helpers -----------------------------------------------------------

std::string fixed(double v) { return fmt::format("{:.3f}", v); }

std::string tfn_text(const Tfn<double>& t) {
  return fmt::format("({:.3f}, {:.3f}, {:.3f})", t.lower(), t.modal(), t.upper());
}

std::string keyed_text(const KeyedVector<double>& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!s.empty()) s += "  ";
    s += fmt::format("{} {:.3f}", v.keys[static_cast<std::size_t>(i)], v.values(i));
  }
  return s;
}

}  // namespace

json report_to_json(const EvaluationReport& report) {
  json rans = json::array();
  for (const auto& rr : report.rans) {
    json apps = json::array();
    for (const auto& a : rr.applications) {
      json params = json::array();
      for (const auto& p : a.parameters) {
        params.push_back({{"parameter", to_string(p.parameter)},
                          {"raw_mean", p.raw_mean},
                          {"unit", to_string(p.unit)},
                          {"samples", p.samples},
                          {"score", p.score},
                          {"weight", p.weight}});
      }
      apps.push_back({{"id", a.id},
                      {"class", to_string(a.app_class)},
                      {"category", a.category},
                      {"users", a.users},
                      {"injected", a.injected},
                      {"parameters", std::move(params)},
                      {"metric", a.metric},
                      {"level", to_string(a.level)},
                      {"weight", a.weight}});
    }
    rans.push_back({{"id", rr.id},
                    {"technology", rr.technology},
                    {"applications", std::move(apps)},
                    {"excluded_applications", rr.excluded_applications},
                    {"weight_source", to_string(rr.weight_source)},
                    {"matrix", rr.matrix ? matrix_json(*rr.matrix) : json(nullptr)},
                    {"application_weights", keyed_json(rr.application_weights)},
                    {"metric", rr.metric},
                    {"level", to_string(rr.level)}});
  }
  return {{"schema_version", report.schema_version},
          {"network_id", report.network_id},
          {"thresholds", {{"good", report.thresholds.good}, {"average", report.thresholds.average}}},
          {"rans", std::move(rans)},
          {"ran_weight_source", to_string(report.ran_weight_source)},
          {"ran_weights", keyed_json(report.ran_weights)},
          {"metric", report.metric},
          {"level", to_string(report.level)},
          {"warnings", report.warnings}};
}

EvaluationReport report_from_json(const json& doc) {
  EvaluationReport r;
  r.schema_version = get<int>(doc, "schema_version");
  if (r.schema_version != kReportSchemaVersion) {
    throw ValidationError(fmt::format("report: unsupported schema version {}", r.schema_version));
  }
  r.network_id = get<std::string>(doc, "network_id");
  const auto& t = field(doc, "thresholds");
  r.thresholds = {get<double>(t, "good"), get<double>(t, "average")};
  for (const auto& jr : field(doc, "rans")) {
    RanReport rr;
    rr.id = get<std::string>(jr, "id");
    rr.technology = get<std::string>(jr, "technology");
    for (const auto& ja : field(jr, "applications")) {
      ApplicationReport a;
      a.id = get<std::string>(ja, "id");
      a.app_class = get_enum<AppClass>(ja, "class", parse_app_class);
      a.category = get<std::string>(ja, "category");
      a.users = get<std::int64_t>(ja, "users");
      a.injected = get<bool>(ja, "injected");
      for (const auto& jp : field(ja, "parameters")) {
        a.parameters.push_back({get_enum<Parameter>(jp, "parameter", parse_parameter),
                                get<double>(jp, "raw_mean"), get_enum<Unit>(jp, "unit", parse_unit),
                                get<std::size_t>(jp, "samples"), get<double>(jp, "score"), get<double>(jp, "weight")});
      }
      a.metric = get<double>(ja, "metric");
      a.level = get_enum<QosLevel>(ja, "level", parse_level);
      a.weight = get<double>(ja, "weight");
      rr.applications.push_back(std::move(a));
    }
    rr.excluded_applications = get<std::vector<std::string>>(jr, "excluded_applications");
    rr.weight_source = get_enum<WeightSource>(jr, "weight_source", parse_weight_source);
    if (const auto& jm = field(jr, "matrix"); !jm.is_null()) rr.matrix = matrix_from(jm);
    rr.application_weights = keyed_from(field(jr, "application_weights"));
    rr.metric = get<double>(jr, "metric");
    rr.level = get_enum<QosLevel>(jr, "level", parse_level);
    r.rans.push_back(std::move(rr));
  }
  r.ran_weight_source = get_enum<WeightSource>(doc, "ran_weight_source", parse_weight_source);
  r.ran_weights = keyed_from(field(doc, "ran_weights"));
  r.metric = get<double>(doc, "metric");
  r.level = get_enum<QosLevel>(doc, "level", parse_level);
  r.warnings = get<std::vector<std::string>>(doc, "warnings");
  return r;
}

json whatif_to_json(const WhatIfResult& result) {
  json deltas = json::array();
  for (const auto& d : result.deltas) {
    deltas.push_back({{"layer", to_string(d.layer)},
                      {"ran", d.ran},
                      {"id", d.id},
                      {"quantity", d.quantity},
                      {"before", d.before},
                      {"after", d.after},
                      {"delta", d.delta}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"directive", {{"from", result.directive.from}, {"scale", result.directive.scale}, {"to", result.directive.to}}},
          {"baseline", report_to_json(result.baseline)},
          {"modified", report_to_json(result.modified)},
          {"deltas", std::move(deltas)},
          {"network_delta", result.network_delta()},
          {"unchanged", result.unchanged()}};
}

std::string render_matrix(const MatrixReport& m) {
  std::string out;
  std::size_t width = 6;
  for (const auto& a : m.alternatives) width = std::max(width, a.size());
  auto end_line = [](std::string& s) {
    s.erase(s.find_last_not_of(' ') + 1);
    s += "\n";
  };
  auto grid = [&](const TfnMatrix<double>& cells) {
    std::string s = fmt::format("    {:<{}}", "", width);
    for (const auto& a : m.alternatives) s += fmt::format("  {:<23}", a);
    end_line(s);
    for (Eigen::Index i = 0; i < cells.size(); ++i) {
      s += fmt::format("    {:<{}}", m.alternatives[static_cast<std::size_t>(i)], width);
      for (Eigen::Index j = 0; j < cells.size(); ++j) {
        s += fmt::format("  {:<23}", fmt::format("({:.3f}, {:.3f}, {:.3f})", cells.lower(i, j), cells.modal(i, j),
                                                  cells.upper(i, j)));
      }
      end_line(s);
    }
    return s;
  };
  for (const auto& c : m.criteria) out += fmt::format("  criterion {}:\n", c.name) + grid(c.judgments);
  out += "  pooled comparison matrix:\n" + grid(m.cells);
  out += "  synthetic extents:\n";
  for (const auto& e : m.extents) out += fmt::format("    {:<{}}  {}\n", e.alternative, width, tfn_text(e.extent));
  out += fmt::format("  raw weights:        {}\n", keyed_text(m.raw_weights));
  out += fmt::format("  normalized weights: {}\n", keyed_text(m.weights));
  return out;
}

std::string render_text(const EvaluationReport& report) {
  std::string out = fmt::format("QoS evaluation report: network {}\n", report.network_id);
  out += fmt::format("thresholds: good >= {}, average >= {}\n", fixed(report.thresholds.good),
                     fixed(report.thresholds.average));
  for (const auto& rr : report.rans) {
    out += fmt::format("\nRAN {} ({})  application weights: {}\n", rr.id, rr.technology, to_string(rr.weight_source));
    out += fmt::format("  {:<14} {:<6} {:<14} {:>6} {:>7} {:>7}  {}\n", "application", "class", "category", "users",
                       "weight", "QoSAM", "level");
    for (const auto& a : rr.applications) {
      out += fmt::format("  {:<14} {:<6} {:<14} {:>6} {:>7} {:>7}  {}\n", a.id, to_string(a.app_class), a.category,
                         a.users, fixed(a.weight), fixed(a.metric), to_string(a.level));
    }
    for (const auto& a : rr.applications) {
      if (a.injected) {
        out += fmt::format("    {}: injected metric\n", a.id);
        continue;
      }
      std::string params;
      for (const auto& p : a.parameters) {
        if (!params.empty()) params += "; ";
        params += fmt::format("{} {} {} -> {} (w {})", to_string(p.parameter), fixed(p.raw_mean), to_string(p.unit),
                              fixed(p.score), fixed(p.weight));
      }
      out += fmt::format("    {}: {}\n", a.id, params);
    }
    if (!rr.excluded_applications.empty()) {
      std::string ex;
      for (const auto& e : rr.excluded_applications) ex += (ex.empty() ? "" : ", ") + e;
      out += fmt::format("    excluded (no measurements): {}\n", ex);
    }
    out += fmt::format("  RAN {} QoSRM {}  {}\n", rr.id, fixed(rr.metric), to_string(rr.level));
  }
  out += fmt::format("\nNetwork {}  RAN weights ({}): {}\n", report.network_id, to_string(report.ran_weight_source),
                     keyed_text(report.ran_weights));
  out += fmt::format("Network {} QoSCM {}  {}\n", report.network_id, fixed(report.metric), to_string(report.level));
  if (!report.warnings.empty()) {
    out += "\nwarnings:\n";
    for (const auto& w : report.warnings) out += fmt::format("  - {}\n", w);
  }
  return out;
}

std::string render_text(const WhatIfResult& result) {
  const auto& d = result.directive;
  std::string out = fmt::format("What-if: {} judged k{} ({}) over {}\n", d.from, d.scale,
                                kImportanceScale[static_cast<std::size_t>(d.scale - 1)].label, d.to);
  std::size_t ran_w = 3, id_w = 2;
  for (const auto& m : result.deltas) {
    ran_w = std::max(ran_w, m.ran.size());
    id_w = std::max(id_w, m.id.size());
  }
  out += fmt::format("  {:<12} {:<{}} {:<{}} {:<8} {:>7} {:>7} {:>7}\n", "layer", "ran", ran_w, "id", id_w, "quantity",
                     "before", "after", "delta");
  for (const auto& m : result.deltas) {
    out += fmt::format("  {:<12} {:<{}} {:<{}} {:<8} {:>7} {:>7} {:>+7.3f}\n", to_string(m.layer), m.ran, ran_w, m.id,
                       id_w, m.quantity, fixed(m.before), fixed(m.after), m.delta);
  }
  out += fmt::format("network QoSCM {} {} -> {} {}\n", fixed(result.baseline.metric), to_string(result.baseline.level),
                     fixed(result.modified.metric), to_string(result.modified.level));
  if (result.unchanged()) out += "no change\n";
  out += "\n--- modified ---\n" + render_text(result.modified);
  return out;
}

std::string render(const EvaluationReport& report, ReportFormat format) {
  return format == ReportFormat::json ? report_to_json(report).dump(2) + "\n" : render_text(report);
}

std::string render(const WhatIfResult& result, ReportFormat format) {
  return format == ReportFormat::json ? whatif_to_json(result).dump(2) + "\n" : render_text(result);
}

}  // namespace qoseval
