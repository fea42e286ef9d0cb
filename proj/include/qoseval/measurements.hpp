#pragma once

#include "qoseval/config.hpp"
#include "qoseval/qos_engine.hpp"

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <tuple>

namespace qoseval {

inline constexpr const char* kMeasurementHeader = "ran_id,app_id,parameter,value,unit";

/// Window mean of one (RAN, application, parameter) series.
struct ParameterAggregate {
  double mean = 0.0;
  std::size_t samples = 0;
  Unit unit = Unit::ms;
};

class MeasurementSet {
 public:
  using Series = std::map<Parameter, ParameterAggregate>;

  void add(const std::string& ran, const std::string& app, Parameter p, double value, Unit unit);

  /// Aggregated parameters for one application; empty when nothing was measured.
  const Series& series(const std::string& ran, const std::string& app) const;
  bool has(const std::string& ran, const std::string& app) const;
  std::size_t row_count() const { return rows_; }

 private:
  std::map<std::pair<std::string, std::string>, Series> data_;
  std::size_t rows_ = 0;
};

/// Parses CSV rows and validates them against `cfg`. Errors cite the
/// one-based line number (the header is line 1).
MeasurementSet parse_measurements(std::istream& in, const NetworkConfiguration& cfg);

MeasurementSet load_measurements(const std::filesystem::path& path, const NetworkConfiguration& cfg);

}  // namespace qoseval
