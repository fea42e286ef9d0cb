#pragma once

#include "qoseval/errors.hpp"
#include "qoseval/keyed_vector.hpp"
#include "qoseval/qos_engine.hpp"
#include "qoseval/weight_rules.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qoseval {

inline constexpr int kConfigSchemaVersion = 1;

enum class AppClass { vc, voice, vs, other };

const char* to_string(AppClass c);
std::optional<AppClass> parse_app_class(std::string s);

/// Profile family used for default acceptable ranges ("voice" or "video").
const char* profile_family(AppClass c);

enum class RanWeighting { uniform, users };

const char* to_string(RanWeighting w);

struct ApplicationConfig {
  std::string id;
  AppClass app_class = AppClass::other;
  std::string category;
  std::int64_t users = 0;
  /// Injected QoSAM; replaces the measurement-derived metric when set.
  std::optional<double> qos_metric;

  friend bool operator==(const ApplicationConfig&, const ApplicationConfig&) = default;
};

struct RanConfig {
  std::string id;
  std::string technology = "other";
  std::vector<ApplicationConfig> applications;
  /// Explicit application weights; bypass extent analysis for this RAN.
  std::optional<WeightVector<double>> application_weights;

  const ApplicationConfig* find(const std::string& app_id) const;
};

using ProfileSet = std::map<Parameter, ParameterProfile<double>>;

struct NetworkConfiguration {
  int schema_version = kConfigSchemaVersion;
  std::string network_id;
  std::vector<RanConfig> rans;
  WeightRuleConfig weight_rules;
  /// Keyed by application class name; defaults filled for vc, voice, vs.
  std::map<std::string, ProfileSet> profiles;
  /// Keyed by application class name; defaults filled for every class.
  std::map<std::string, WeightVector<double>> parameter_weights;
  QosThresholds<double> thresholds;
  RanWeighting ran_weighting = RanWeighting::uniform;
  std::optional<WeightVector<double>> ran_weights;

  const RanConfig* find_ran(const std::string& ran_id) const;
  bool has_application(const std::string& app_id) const;
};

/// Parses and validates a configuration document, filling in defaults.
/// Throws ValidationError naming the offending field path.
NetworkConfiguration parse_config(const nlohmann::json& doc);

/// Reads `path` (IoError when unreadable) and parses it.
NetworkConfiguration load_config(const std::filesystem::path& path);

/// Re-checks cross-field invariants of an in-memory configuration.
void validate_config(const NetworkConfiguration& cfg);

std::vector<ApplicationContext> application_contexts(const RanConfig& ran);

}  // namespace qoseval
