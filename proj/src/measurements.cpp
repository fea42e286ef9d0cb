#include "qoseval/measurements.hpp"

#include <fmt/core.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace qoseval {

void MeasurementSet::add(const std::string& ran, const std::string& app, Parameter p, double value, Unit unit) {
  auto& agg = data_[{ran, app}][p];
  agg.samples += 1;
  agg.mean += (value - agg.mean) / static_cast<double>(agg.samples);
  agg.unit = unit;
  ++rows_;
}

const MeasurementSet::Series& MeasurementSet::series(const std::string& ran, const std::string& app) const {
  static const Series empty;
  auto it = data_.find({ran, app});
  return it == data_.end() ? empty : it->second;
}

bool MeasurementSet::has(const std::string& ran, const std::string& app) const {
  return data_.find({ran, app}) != data_.end();
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos
                                                                                        : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void row_error(std::size_t line, const std::string& what) {
  throw ValidationError(fmt::format("measurements line {}: {}", line, what));
}

}  // namespace

MeasurementSet parse_measurements(std::istream& in, const NetworkConfiguration& cfg) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  MeasurementSet set;
  while (std::getline(in, line)) {
    ++line_no;
    const auto trimmed = trim(line);
    if (trimmed.empty()) continue;
    if (!have_header) {
      std::string compact;
      for (const auto& f : split(trimmed)) compact += (compact.empty() ? "" : ",") + f;
      if (compact != kMeasurementHeader) {
        row_error(line_no, fmt::format("expected header '{}'", kMeasurementHeader));
      }
      have_header = true;
      continue;
    }
    const auto fields = split(trimmed);
    if (fields.size() != 5) row_error(line_no, fmt::format("expected 5 fields, got {}", fields.size()));
    const auto& [ran_id, app_id, param_name, value_text, unit_name] =
        std::tie(fields[0], fields[1], fields[2], fields[3], fields[4]);

    const auto* ran = cfg.find_ran(ran_id);
    if (!ran) row_error(line_no, fmt::format("unknown RAN '{}'", ran_id));
    if (!ran->find(app_id)) row_error(line_no, fmt::format("unknown application '{}' in RAN '{}'", app_id, ran_id));
    const auto parameter = parse_parameter(param_name);
    if (!parameter) row_error(line_no, fmt::format("unknown parameter '{}'", param_name));
    const auto unit = parse_unit(unit_name);
    if (!unit) row_error(line_no, fmt::format("unknown unit '{}'", unit_name));
    if (*unit != expected_unit(*parameter)) {
      row_error(line_no, fmt::format("unit mismatch: {} is measured in {}, got {}", param_name,
                                     to_string(expected_unit(*parameter)), unit_name));
    }
    double value = 0.0;
    const auto* begin = value_text.data();
    const auto* end = begin + value_text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (value_text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
      row_error(line_no, fmt::format("non-numeric value '{}'", value_text));
    }
    if (value < 0.0) row_error(line_no, fmt::format("negative value {}", value_text));
    set.add(ran_id, app_id, *parameter, value, *unit);
  }
  if (!have_header) throw ValidationError("measurements: missing header line");
  return set;
}

MeasurementSet load_measurements(const std::filesystem::path& path, const NetworkConfiguration& cfg) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open measurements '{}'", path.string()));
  return parse_measurements(in, cfg);
}

}  // namespace qoseval
