#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qoseval {

/// Triangular fuzzy number (l, m, u) with strictly positive support.
///
/// Membership rises linearly from `lower` to the modal value and falls back to
/// zero at `upper`. A degenerate number (l == m == u) is a crisp judgment.
template <typename Scalar>
class Tfn {
 public:
  Tfn() : lower_(1), modal_(1), upper_(1) {}

  Tfn(Scalar lower, Scalar modal, Scalar upper) : lower_(lower), modal_(modal), upper_(upper) {
    if (!(std::isfinite(lower) && std::isfinite(modal) && std::isfinite(upper))) {
      throw std::invalid_argument("TFN components must be finite");
    }
    if (!(lower > Scalar(0))) {
      throw std::invalid_argument("TFN lower bound must be strictly positive");
    }
    if (!(lower <= modal && modal <= upper)) {
      std::ostringstream os;
      os << "TFN must satisfy l <= m <= u, got (" << lower << ", " << modal << ", " << upper << ")";
      throw std::invalid_argument(os.str());
    }
  }

  static Tfn crisp(Scalar value) { return Tfn(value, value, value); }

  Scalar lower() const { return lower_; }
  Scalar modal() const { return modal_; }
  Scalar upper() const { return upper_; }

  bool is_crisp() const { return lower_ == modal_ && modal_ == upper_; }

  /// Membership grade of `x`.
  Scalar membership(Scalar x) const {
    if (x < lower_ || x > upper_) return Scalar(0);
    if (x == modal_) return Scalar(1);
    if (x < modal_) return (x - lower_) / (modal_ - lower_);
    return (upper_ - x) / (upper_ - modal_);
  }

  friend bool operator==(const Tfn&, const Tfn&) = default;

 private:
  Scalar lower_;
  Scalar modal_;
  Scalar upper_;
};

template <typename Scalar>
Tfn<Scalar> operator+(const Tfn<Scalar>& a, const Tfn<Scalar>& b) {
  return {a.lower() + b.lower(), a.modal() + b.modal(), a.upper() + b.upper()};
}

/// Fuzzy multiplication of two positive TFNs (component-wise approximation).
template <typename Scalar>
Tfn<Scalar> operator*(const Tfn<Scalar>& a, const Tfn<Scalar>& b) {
  return {a.lower() * b.lower(), a.modal() * b.modal(), a.upper() * b.upper()};
}

template <typename Scalar>
Tfn<Scalar> operator*(const Tfn<Scalar>& a, Scalar factor) {
  if (!(factor > Scalar(0))) throw std::invalid_argument("TFN scale factor must be positive");
  return {a.lower() * factor, a.modal() * factor, a.upper() * factor};
}

template <typename Scalar>
Tfn<Scalar> operator*(Scalar factor, const Tfn<Scalar>& a) {
  return a * factor;
}

/// (l, m, u)^-1 = (1/u, 1/m, 1/l).
template <typename Scalar>
Tfn<Scalar> reciprocal(const Tfn<Scalar>& a) {
  return {Scalar(1) / a.upper(), Scalar(1) / a.modal(), Scalar(1) / a.lower()};
}

/// Element-wise arithmetic mean; this is how per-criterion judgments are pooled.
template <typename Scalar>
Tfn<Scalar> mean(std::span<const Tfn<Scalar>> values) {
  if (values.empty()) throw std::invalid_argument("mean of an empty TFN list");
  Scalar l = 0, m = 0, u = 0;
  for (const auto& v : values) {
    l += v.lower();
    m += v.modal();
    u += v.upper();
  }
  const auto n = static_cast<Scalar>(values.size());
  return {l / n, m / n, u / n};
}

template <typename Scalar>
Tfn<Scalar> mean(std::initializer_list<Tfn<Scalar>> values) {
  return mean(std::span<const Tfn<Scalar>>(values.begin(), values.size()));
}

/// Degree of possibility V(b >= a): height of the highest intersection of the
/// two membership functions, or 1 when b's mode is not below a's.
template <typename Scalar>
Scalar degree_of_possibility(const Tfn<Scalar>& b, const Tfn<Scalar>& a) {
  if (b.modal() >= a.modal()) return Scalar(1);
  if (a.lower() >= b.upper()) return Scalar(0);
  // Here m_b < m_a and l_a < u_b, so the denominator is strictly negative.
  const Scalar v = (a.lower() - b.upper()) / ((b.modal() - b.upper()) - (a.modal() - a.lower()));
  return std::clamp(v, Scalar(0), Scalar(1));
}

/// min over `others` of V(b >= a).
template <typename Scalar>
Scalar min_degree_of_possibility(const Tfn<Scalar>& b, std::span<const Tfn<Scalar>> others) {
  if (others.empty()) throw std::invalid_argument("degree of possibility against an empty set");
  Scalar result = Scalar(1);
  for (const auto& a : others) result = std::min(result, degree_of_possibility(b, a));
  return result;
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Tfn<Scalar>& t) {
  return os << '(' << t.lower() << ", " << t.modal() << ", " << t.upper() << ')';
}

// ---------------------------------------------------------------------------
// Nine-step fuzzy importance scale.

struct ScaleEntry {
  int index;                 // 1..9
  std::string_view label;    // human-readable definition
  std::string_view keyword;  // token accepted on the command line
  std::array<double, 3> lmu;
};

inline constexpr std::array<ScaleEntry, 9> kImportanceScale{{
    {1, "Equal importance", "equal", {1.0, 1.0, 1.0}},
    {2, "Intermediate values", "k2", {1.0 / 2, 3.0 / 4, 1.0}},
    {3, "Moderate importance", "moderate", {2.0 / 3, 1.0, 3.0 / 2}},
    {4, "Intermediate values", "k4", {1.0, 3.0 / 2, 2.0}},
    {5, "Strong importance", "strong", {3.0 / 2, 2.0, 5.0 / 2}},
    {6, "Intermediate values", "k6", {2.0, 5.0 / 2, 3.0}},
    {7, "Very strong importance", "very-strong", {5.0 / 2, 3.0, 7.0 / 2}},
    {8, "Intermediate values", "k8", {3.0, 7.0 / 2, 4.0}},
    {9, "Extreme importance", "extreme", {7.0 / 2, 4.0, 9.0 / 2}},
}};

/// k_index from the importance scale, index in 1..9.
template <typename Scalar = double>
Tfn<Scalar> scale(int index) {
  if (index < 1 || index > 9) {
    throw std::out_of_range("importance scale index must be in 1..9, got " + std::to_string(index));
  }
  const auto& e = kImportanceScale[static_cast<std::size_t>(index - 1)];
  return {static_cast<Scalar>(e.lmu[0]), static_cast<Scalar>(e.lmu[1]), static_cast<Scalar>(e.lmu[2])};
}

/// Resolves "k1".."k9", a keyword ("strong") or keyword with "-over" suffix
/// ("extreme-over") to a scale index.
inline std::optional<int> parse_scale(std::string_view token) {
  constexpr std::string_view kOver = "-over";
  if (token.size() > kOver.size() && token.substr(token.size() - kOver.size()) == kOver) {
    token.remove_suffix(kOver.size());
  }
  if (token.size() == 2 && (token[0] == 'k' || token[0] == 'K') && token[1] >= '1' && token[1] <= '9') {
    return token[1] - '0';
  }
  for (const auto& e : kImportanceScale) {
    if (e.keyword == token) return e.index;
  }
  if (token == "very_strong" || token == "verystrong") return 7;
  return std::nullopt;
}

}  // namespace qoseval
