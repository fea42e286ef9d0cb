#pragma once

// Reference computations used only by the tests. They deliberately avoid the
// library's closed forms: the degree of possibility is found by sampling the
// sup-min definition, and extent analysis is recomputed with plain loops.

#include <algorithm>
#include <array>
#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

using Triple = std::array<double, 3>;  // (l, m, u)

inline double membership(const Triple& t, double x) {
  const auto [l, m, u] = t;
  if (x < l || x > u) return 0.0;
  if (x == m) return 1.0;
  return x < m ? (x - l) / (m - l) : (u - x) / (u - m);
}

/// sup over y <= x of membership(a, y), i.e. the possibility that a does not exceed x.
inline double at_most(const Triple& a, double x) {
  if (x >= a[1]) return 1.0;
  return membership(a, x);
}

/// V(b >= a) = sup_{x >= y} min(mu_b(x), mu_a(y)), sampled over x with
/// successive zoom-in around the best sample.
inline double possibility(const Triple& b, const Triple& a) {
  auto g = [&](double x) { return std::min(membership(b, x), at_most(a, x)); };
  double lo = std::min(a[0], b[0]);
  double hi = std::max(a[2], b[2]);
  std::vector<double> xs;
  constexpr int kCoarse = 4000;
  for (int i = 0; i <= kCoarse; ++i) xs.push_back(lo + (hi - lo) * i / kCoarse);
  for (double p : {a[0], a[1], a[2], b[0], b[1], b[2]}) xs.push_back(p);
  std::sort(xs.begin(), xs.end());

  double best = -1.0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (const double v = g(xs[i]); v > best) {
      best = v;
      arg = i;
    }
  }
  double left = xs[arg > 0 ? arg - 1 : 0];
  double right = xs[std::min(arg + 1, xs.size() - 1)];
  constexpr int kFine = 200;
  for (int round = 0; round < 8 && right > left; ++round) {
    double best_x = left;
    for (int i = 0; i <= kFine; ++i) {
      const double x = left + (right - left) * i / kFine;
      if (const double v = g(x); v > best) {
        best = v;
        best_x = x;
      } else if (v == best) {
        best_x = x;
      }
    }
    const double step = (right - left) / kFine;
    left = std::max(left, best_x - step);
    right = std::min(right, best_x + step);
  }
  return best;
}

using Matrix = std::vector<std::vector<Triple>>;

struct ExtentResult {
  std::vector<Triple> extents;
  std::vector<double> raw;
  std::vector<double> normalized;
};

/// Spreadsheet-style extent analysis: row sums, grand totals, extents,
/// pairwise possibilities (sampled), minimum, normalization.
inline ExtentResult extent_analysis(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<Triple> rows(n, Triple{0, 0, 0});
  Triple total{0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (int k = 0; k < 3; ++k) {
        rows[i][k] += m[i][j][k];
        total[k] += m[i][j][k];
      }
    }
  }
  ExtentResult r;
  for (std::size_t i = 0; i < n; ++i) {
    r.extents.push_back({rows[i][0] / total[2], rows[i][1] / total[1], rows[i][2] / total[0]});
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) d = std::min(d, possibility(r.extents[i], r.extents[j]));
    }
    r.raw.push_back(d);
    sum += d;
  }
  for (double d : r.raw) r.normalized.push_back(d / sum);
  return r;
}

/// Random TFN with l in [0.1, 5), spreads in [0, 2); roughly one in ten is crisp.
inline Triple random_tfn(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> base(0.1, 5.0);
  std::uniform_real_distribution<double> spread(0.0, 2.0);
  std::uniform_int_distribution<int> crisp(0, 9);
  const double l = base(rng);
  if (crisp(rng) == 0) return {l, l, l};
  const double m = l + spread(rng);
  return {l, m, m + spread(rng)};
}

}  // namespace oracle
