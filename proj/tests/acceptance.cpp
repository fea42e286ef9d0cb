// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include "oracles.hpp"
#include "reference_matrix.hpp"

#include "qoseval/config.hpp"
#include "qoseval/errors.hpp"
#include "qoseval/evaluate.hpp"
#include "qoseval/measurements.hpp"
#include "qoseval/qos_engine.hpp"
#include "qoseval/report.hpp"

#include <fmt/core.h>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qoseval;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures{QOSEVAL_FIXTURE_DIR};

/// Collects failed checks for one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
  void near(double actual, double expected, double tol, const std::string& what) {
    expect(std::abs(actual - expected) <= tol, fmt::format("{}: {} vs {} (tol {})", what, actual, expected, tol));
  }
};

using T = Tfn<double>;
using Matrix = FuzzyComparisonMatrix<double>;

std::vector<std::string> names(std::size_t n, const std::string& prefix = "a") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

T random_tfn(std::mt19937_64& rng) {
  const auto t = oracle::random_tfn(rng);
  return {t[0], t[1], t[2]};
}

bool ordered(const T& t) { return t.lower() > 0 && t.lower() <= t.modal() && t.modal() <= t.upper(); }

bool tfn_near(const T& a, const T& b, double tol) {
  return std::abs(a.lower() - b.lower()) <= tol && std::abs(a.modal() - b.modal()) <= tol &&
         std::abs(a.upper() - b.upper()) <= tol;
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = ::pclose(pipe);
  return out;
}

void criterion_1(Check& c) {
  const auto w = normalize(WeightVector<double>{{"VC", 1.0}, {"Voice", 0.94}, {"VS", 0.56}});
  c.near(w.at("VC"), 0.4, 1e-9, "VC");
  c.near(w.at("Voice"), 0.376, 1e-9, "Voice");
  c.near(w.at("VS"), 0.224, 1e-9, "VS");
}

void criterion_2(Check& c) {
  const auto m = reference::layered();
  c.expect(validate_matrix(m).ok(), "pooled matrix validates");
  const auto a = extent_analysis(m);
  c.near(a.weights.at("VC"), 0.4, 0.05, "w VC");
  c.near(a.weights.at("Voice"), 0.376, 0.05, "w Voice");
  c.near(a.weights.at("VS"), 0.224, 0.05, "w VS");
  c.expect(a.raw.at("VC") == 1.0, "raw VC is exactly 1");

  const auto ref = oracle::extent_analysis(reference::to_oracle(m.cells()));
  for (std::size_t i = 0; i < 3; ++i) {
    c.near(a.raw.values(static_cast<Eigen::Index>(i)), ref.raw[i], 1e-6, "raw vs oracle " + reference::kApps[i]);
  }

  // The published, two-decimal matrix through the same kernel: raw ~ (1, 1, 0.537).
  const auto rounded = reference::from_oracle(reference::kRounded);
  std::vector<SyntheticExtent<double>> extents;
  const auto s = synthetic_extents(rounded);
  for (std::size_t i = 0; i < s.size(); ++i) extents.push_back({reference::kApps[i], s[i]});
  const auto raw = raw_weights(extents);
  const auto rounded_ref = oracle::extent_analysis(reference::kRounded);
  for (std::size_t i = 0; i < 3; ++i) {
    c.near(raw.values(static_cast<Eigen::Index>(i)), rounded_ref.raw[i], 1e-6, "rounded raw vs oracle");
  }
  c.near(raw.at("VS"), 0.537, 1e-3, "rounded raw VS");
}

void criterion_3(Check& c) {
  for (const auto& p : reference::kUpper) {
    const auto i = static_cast<std::size_t>(p.i);
    const auto j = static_cast<std::size_t>(p.j);
    const auto upper = mean({p.purpose, p.users});
    const auto lower = mean({reciprocal(p.purpose), reciprocal(p.users)});
    const auto& pu = reference::kRounded[i][j];
    const auto& pl = reference::kRounded[j][i];
    c.expect(tfn_near(upper, {pu[0], pu[1], pu[2]}, 0.01), fmt::format("cell ({},{})", i + 1, j + 1));
    c.expect(tfn_near(lower, {pl[0], pl[1], pl[2]}, 0.01), fmt::format("cell ({},{})", j + 1, i + 1));
  }
}

EvaluationReport voice_streaming(int voice_over_vs) {
  auto cfg = load_config(kFixtures / "voice_streaming.json");
  if (voice_over_vs != 0) {
    const T k = scale(std::abs(voice_over_vs));
    cfg.weight_rules.overrides = {{std::nullopt, voice_over_vs > 0 ? "voice" : "vs",
                                   voice_over_vs > 0 ? "vs" : "voice", k}};
  }
  return evaluate(cfg, MeasurementSet{});
}

void criterion_4(Check& c) {
  const auto equal = voice_streaming(0);
  c.near(equal.rans.at(0).metric, 0.81, 1e-12, "equal-importance RAN metric");
  c.expect(equal.rans.at(0).level == QosLevel::good, "equal-importance level good");
  const auto extreme = voice_streaming(9);
  c.near(extreme.rans.at(0).metric, 0.63, 0.02, "extreme voice RAN metric");
  c.expect(extreme.rans.at(0).level == QosLevel::average, "extreme voice level average");
}

void criterion_5(Check& c) {
  const auto cfg = load_config(kFixtures / "voice_streaming.json");
  const auto voice = whatif(cfg, MeasurementSet{}, parse_directive("voice", "extreme-over", "vs"));
  const auto vs = whatif(cfg, MeasurementSet{}, parse_directive("vs", "extreme-over", "voice"));
  c.expect(vs.modified.rans.at(0).metric > voice.modified.rans.at(0).metric,
           fmt::format("VS-extreme {} should exceed voice-extreme {}", vs.modified.rans.at(0).metric,
                       voice.modified.rans.at(0).metric));
}

void criterion_6(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = oracle::random_tfn(rng);
    const auto b = oracle::random_tfn(rng);
    const T ta{a[0], a[1], a[2]}, tb{b[0], b[1], b[2]};
    c.near(degree_of_possibility(tb, ta), oracle::possibility(b, a), 1e-3, fmt::format("pair {}", trial));
    c.expect(std::max(degree_of_possibility(ta, tb), degree_of_possibility(tb, ta)) == 1.0,
             fmt::format("completeness pair {}", trial));
  }
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 5.0, fmt::format("took {:.2f}s", secs));
}

void criterion_7(Check& c) {
  constexpr int kCases = 200;
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int t = 0; t < kCases; ++t) {
    const T a = random_tfn(rng), b = random_tfn(rng), d = random_tfn(rng);
    c.expect(ordered(a + b) && ordered(mean({a, b, d})) && ordered(reciprocal(a)), "TFN closure");
    c.expect(tfn_near(reciprocal(reciprocal(a)), a, 1e-12), "reciprocal involution");
  }

  std::uniform_int_distribution<int> size(2, 6);
  for (int t = 0; t < kCases; ++t) {
    const auto n = size(rng);
    TfnMatrix<double> cells(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) cells.set_pair(i, j, random_tfn(rng));
    }
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto base = names(static_cast<std::size_t>(n));
    std::vector<std::string> permuted_names;
    TfnMatrix<double> permuted(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      permuted_names.push_back(base[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
      for (Eigen::Index j = 0; j < n; ++j) {
        permuted.set(i, j, cells(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));
      }
    }
    const auto w = derive_weights(Matrix(base, cells));
    const auto wp = derive_weights(Matrix(permuted_names, permuted));
    for (const auto& k : base) c.near(w.at(k), wp.at(k), 1e-12, "permutation equivariance");
  }

  for (int t = 0; t < kCases; ++t) {
    const auto n = static_cast<Eigen::Index>(2 + t % 20);
    const auto w = derive_weights(Matrix(names(static_cast<std::size_t>(n)), TfnMatrix<double>::uniform(n)));
    for (Eigen::Index i = 0; i < n; ++i) c.near(w.values(i), 1.0 / static_cast<double>(n), 1e-15, "uniform weights");
  }

  auto random_weights = [&](std::size_t n) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = 0.01 + unit(rng);
    return normalize(WeightVector<double>(names(n, "k"), v));
  };
  auto random_scores = [&](std::size_t n) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = unit(rng);
    return KeyedVector<double>(names(n, "k"), v);
  };

  for (int t = 0; t < kCases; ++t) {
    const auto n = static_cast<std::size_t>(size(rng));
    const auto w = random_weights(n);
    const double s = unit(rng);
    const KeyedVector<double> flat(names(n, "k"), Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), s));
    c.near(application_metric(flat, w), s, 1e-12, "idempotence QoSAM");
    c.near(ran_metric(flat, w), s, 1e-12, "idempotence QoSRM");
    c.near(network_metric(flat, w).metric, s, 1e-12, "idempotence QoSCM");
  }

  for (int t = 0; t < kCases; ++t) {
    const auto n = static_cast<std::size_t>(size(rng));
    const auto w = random_weights(n);
    auto s = random_scores(n);
    const auto i = static_cast<Eigen::Index>(t % static_cast<int>(n));
    const double a0 = application_metric(s, w), r0 = ran_metric(s, w), n0 = network_metric(s, w).metric;
    s.values(i) += (1.0 - s.values(i)) * unit(rng);
    c.expect(application_metric(s, w) >= a0 && ran_metric(s, w) >= r0 && network_metric(s, w).metric >= n0,
             "metric monotone in a single score");
  }

  for (int t = 0; t < kCases; ++t) {
    double worse = unit(rng), better = unit(rng);
    if (worse > better) std::swap(worse, better);
    if (better - worse < 1e-6) better = std::min(1.0, worse + 0.1);
    double w1 = unit(rng) * 0.5, w2 = 0.5 + unit(rng) * 0.5;
    const KeyedVector<double> apps{{"a", worse}, {"b", better}};
    const double lo = ran_metric(apps, WeightVector<double>{{"a", w1}, {"b", 1.0 - w1}});
    const double hi = ran_metric(apps, WeightVector<double>{{"a", w2}, {"b", 1.0 - w2}});
    c.expect(hi < lo, "weight shift toward the worse application lowers QoSRM");
  }
}

void criterion_8(Check& c) {
  const auto config = (kFixtures / "umts_wimax.json").string();
  const auto csv = (kFixtures / "umts_wimax_measurements.csv").string();
  const auto cmd = fmt::format("'{}' evaluate '{}' '{}' --format json", QOSEVAL_CLI, config, csv);
  int s1 = 0, s2 = 0;
  const auto first = run_command(cmd, s1);
  const auto second = run_command(cmd, s2);
  c.expect(s1 == 0 && s2 == 0, "CLI exit status 0");
  c.expect(!first.empty() && first == second, "byte-identical json reports");
  try {
    const auto report = report_from_json(nlohmann::json::parse(first));
    c.near(self_consistency_error(report), 0.0, 1e-9, "self-consistency");
  } catch (const std::exception& e) {
    c.expect(false, std::string("report reparse: ") + e.what());
  }
}

void criterion_9(Check& c) {
  const auto cfg = load_config(kFixtures / "umts_wimax.json");
  auto parse = [&](const std::string& body) {
    std::istringstream in(std::string(kMeasurementHeader) + "\n" + body);
    return parse_measurements(in, cfg);
  };
  const auto row = parse("wimax,vs1,packet-loss,5.72,percent\nwimax,vs1,delay,314.5,ms\nwimax,vs1,jitter,6.89,ms\n");
  const auto& s = row.series("wimax", "vs1");
  c.near(s.at(Parameter::packet_loss).mean, 5.72, 0.0, "packet-loss");
  c.near(s.at(Parameter::delay).mean, 314.5, 0.0, "delay");
  c.near(s.at(Parameter::jitter).mean, 6.89, 0.0, "jitter");

  const auto two = parse("umts,voice,delay,300,ms\numts,voice,delay,329,ms\n");
  c.near(two.series("umts", "voice").at(Parameter::delay).mean, 314.5, 1e-12, "two-point mean");

  try {
    parse("umts,voice,delay,300,ms\numts,ghost,delay,1,ms\n");
    c.expect(false, "unknown application accepted");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    c.expect(msg.find("line 3") != std::string::npos && msg.find("ghost") != std::string::npos,
             "error cites the row: " + msg);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"normalization golden vector", criterion_1},
      {"comparison matrix pipeline within band, oracle agreement", criterion_2},
      {"criterion aggregation reproduces published aggregates", criterion_3},
      {"equal and extreme importance scenario", criterion_4},
      {"shifting importance toward the better application improves the RAN metric", criterion_5},
      {"degree of possibility matches sup-min oracle", criterion_6},
      {"randomized property suites", criterion_7},
      {"end-to-end determinism and self-consistency", criterion_8},
      {"measurement ingestion and aggregation", criterion_9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    fmt::print("{} criterion {}: {}\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first);
    for (const auto& f : c.failures) fmt::print("    {}\n", f);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
