#pragma once

#include "qoseval/keyed_vector.hpp"
#include "qoseval/tfn.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qoseval {

/// n x n grid of triangular fuzzy numbers stored as three dense planes
/// (lower, modal, upper). No invariants are enforced here; it is the raw
/// numeric container behind FuzzyComparisonMatrix.
template <typename Scalar>
struct TfnMatrix {
  using Plane = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Plane lower;
  Plane modal;
  Plane upper;

  TfnMatrix() = default;
  explicit TfnMatrix(Eigen::Index n)
      : lower(Plane::Ones(n, n)), modal(Plane::Ones(n, n)), upper(Plane::Ones(n, n)) {}

  /// All cells equal to the identity judgment (1, 1, 1).
  static TfnMatrix uniform(Eigen::Index n) { return TfnMatrix(n); }

  Eigen::Index size() const { return lower.rows(); }

  Tfn<Scalar> operator()(Eigen::Index i, Eigen::Index j) const {
    return {lower(i, j), modal(i, j), upper(i, j)};
  }

  void set(Eigen::Index i, Eigen::Index j, const Tfn<Scalar>& t) {
    lower(i, j) = t.lower();
    modal(i, j) = t.modal();
    upper(i, j) = t.upper();
  }

  /// Sets (i, j) to `t` and (j, i) to its reciprocal.
  void set_pair(Eigen::Index i, Eigen::Index j, const Tfn<Scalar>& t) {
    set(i, j, t);
    set(j, i, reciprocal(t));
  }

  friend bool operator==(const TfnMatrix& a, const TfnMatrix& b) {
    return a.lower == b.lower && a.modal == b.modal && a.upper == b.upper;
  }
};

/// Overwrites the strict lower triangle with reciprocals of the upper triangle.
template <typename Scalar>
void complete_reciprocals(TfnMatrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    m.set(i, i, Tfn<Scalar>());
    for (Eigen::Index j = i + 1; j < m.size(); ++j) m.set(j, i, reciprocal(m(i, j)));
  }
}

/// Cell-wise arithmetic mean of equally sized matrices.
template <typename Scalar>
TfnMatrix<Scalar> mean(std::span<const TfnMatrix<Scalar>> layers) {
  if (layers.empty()) throw std::invalid_argument("mean of an empty matrix list");
  TfnMatrix<Scalar> out = layers.front();
  for (std::size_t k = 1; k < layers.size(); ++k) {
    if (layers[k].size() != out.size()) throw std::invalid_argument("matrix layers differ in size");
    out.lower += layers[k].lower;
    out.modal += layers[k].modal;
    out.upper += layers[k].upper;
  }
  const auto n = static_cast<Scalar>(layers.size());
  out.lower /= n;
  out.modal /= n;
  out.upper /= n;
  return out;
}

/// One criterion's judgments over the alternatives.
template <typename Scalar>
struct CriterionLayer {
  std::string name;
  TfnMatrix<Scalar> judgments;

  friend bool operator==(const CriterionLayer&, const CriterionLayer&) = default;
};

/// Reciprocal fuzzy judgment matrix over named alternatives.
///
/// A matrix is either given directly, or pooled from per-criterion layers as
/// their cell-wise mean. In the pooled form the reciprocity requirement applies
/// to each criterion layer; the pooled cells r_ji are the mean of the
/// reciprocal judgments, which in general differs from the reciprocal of r_ij.
template <typename Scalar>
class FuzzyComparisonMatrix {
 public:
  FuzzyComparisonMatrix() = default;

  FuzzyComparisonMatrix(std::vector<std::string> alternatives, TfnMatrix<Scalar> cells)
      : alternatives_(std::move(alternatives)), cells_(std::move(cells)) {
    check_shape();
  }

  /// Builds from the upper triangle of `upper`; the diagonal and lower triangle are filled in.
  static FuzzyComparisonMatrix from_upper_triangle(std::vector<std::string> alternatives, TfnMatrix<Scalar> upper) {
    complete_reciprocals(upper);
    return FuzzyComparisonMatrix(std::move(alternatives), std::move(upper));
  }

  static FuzzyComparisonMatrix from_criteria(std::vector<std::string> alternatives,
                                             std::vector<CriterionLayer<Scalar>> layers) {
    if (layers.empty()) throw std::invalid_argument("at least one criterion layer is required");
    std::vector<TfnMatrix<Scalar>> planes;
    planes.reserve(layers.size());
    for (const auto& l : layers) planes.push_back(l.judgments);
    FuzzyComparisonMatrix m(std::move(alternatives), mean(std::span<const TfnMatrix<Scalar>>(planes)));
    m.criteria_ = std::move(layers);
    return m;
  }

  const std::vector<std::string>& alternatives() const { return alternatives_; }
  const TfnMatrix<Scalar>& cells() const { return cells_; }
  const std::vector<CriterionLayer<Scalar>>& criteria() const { return criteria_; }
  Eigen::Index size() const { return cells_.size(); }
  Tfn<Scalar> operator()(Eigen::Index i, Eigen::Index j) const { return cells_(i, j); }

  friend bool operator==(const FuzzyComparisonMatrix&, const FuzzyComparisonMatrix&) = default;

 private:
  void check_shape() const {
    if (cells_.lower.rows() != cells_.lower.cols() || cells_.modal.rows() != cells_.lower.rows() ||
        cells_.modal.cols() != cells_.lower.cols() || cells_.upper.rows() != cells_.lower.rows() ||
        cells_.upper.cols() != cells_.lower.cols()) {
      throw std::invalid_argument("comparison matrix planes must be square and equally sized");
    }
    if (static_cast<Eigen::Index>(alternatives_.size()) != cells_.size()) {
      throw std::invalid_argument("comparison matrix: " + std::to_string(alternatives_.size()) +
                                  " alternatives for a " + std::to_string(cells_.size()) + "x" +
                                  std::to_string(cells_.size()) + " matrix");
    }
  }

  std::vector<std::string> alternatives_;
  TfnMatrix<Scalar> cells_;
  std::vector<CriterionLayer<Scalar>> criteria_;
};

// ---------------------------------------------------------------------------
// Structural validation.

enum class ViolationKind { size, duplicate_alternative, invalid_tfn, diagonal, reciprocity };

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::size: return "size";
    case ViolationKind::duplicate_alternative: return "duplicate-alternative";
    case ViolationKind::invalid_tfn: return "invalid-tfn";
    case ViolationKind::diagonal: return "diagonal";
    case ViolationKind::reciprocity: return "reciprocity";
  }
  return "unknown";
}

/// Row/col are zero-based; messages use one-based (row, col).
struct Violation {
  ViolationKind kind;
  Eigen::Index row = -1;
  Eigen::Index col = -1;
  std::string criterion;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  std::string summary() const {
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v.message;
    }
    return s;
  }
};

class InvalidMatrixError : public std::invalid_argument {
 public:
  explicit InvalidMatrixError(ValidationResult r)
      : std::invalid_argument("invalid comparison matrix: " + r.summary()), result_(std::move(r)) {}
  const ValidationResult& result() const { return result_; }

 private:
  ValidationResult result_;
};

namespace detail {

inline std::string cell_label(Eigen::Index i, Eigen::Index j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

template <typename Scalar>
bool valid_tfn(Scalar l, Scalar m, Scalar u) {
  return std::isfinite(l) && std::isfinite(m) && std::isfinite(u) && l > Scalar(0) && l <= m && m <= u;
}

template <typename Scalar>
void check_plane_set(const TfnMatrix<Scalar>& m, const std::string& criterion, bool check_reciprocity, Scalar tol,
                     ValidationResult& out) {
  const std::string where = criterion.empty() ? "" : " in criterion '" + criterion + "'";
  const Eigen::Index n = m.size();
  std::vector<std::vector<bool>> valid(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const bool ok = valid_tfn(m.lower(i, j), m.modal(i, j), m.upper(i, j));
      valid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ok;
      if (!ok) {
        out.violations.push_back({ViolationKind::invalid_tfn, i, j, criterion,
                                  "invalid TFN at " + cell_label(i, j) + where + " (need 0 < l <= m <= u)"});
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (m.lower(i, i) != Scalar(1) || m.modal(i, i) != Scalar(1) || m.upper(i, i) != Scalar(1)) {
      out.violations.push_back(
          {ViolationKind::diagonal, i, i, criterion, "diagonal violation at " + cell_label(i, i) + where});
    }
  }
  if (!check_reciprocity) return;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (!valid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ||
          !valid[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        continue;
      }
      const auto expected = reciprocal(m(i, j));
      const auto actual = m(j, i);
      if (std::abs(actual.lower() - expected.lower()) > tol || std::abs(actual.modal() - expected.modal()) > tol ||
          std::abs(actual.upper() - expected.upper()) > tol) {
        out.violations.push_back({ViolationKind::reciprocity, j, i, criterion,
                                  "reciprocity violation at " + cell_label(j, i) + where});
      }
    }
  }
}

}  // namespace detail

/// Checks the structural invariants: n >= 2, unique alternatives, valid TFN
/// cells, identity diagonal and reciprocity (per criterion layer when the
/// matrix was pooled from criteria). Every violating cell is listed.
template <typename Scalar>
ValidationResult validate_matrix(const FuzzyComparisonMatrix<Scalar>& m, Scalar tol = Scalar(1e-6)) {
  ValidationResult r;
  if (m.size() < 2) {
    r.violations.push_back({ViolationKind::size, -1, -1, {}, "comparison matrix needs at least 2 alternatives"});
  }
  std::set<std::string> seen;
  for (const auto& a : m.alternatives()) {
    if (!seen.insert(a).second) {
      r.violations.push_back({ViolationKind::duplicate_alternative, -1, -1, {}, "duplicate alternative '" + a + "'"});
    }
  }
  const bool pooled = !m.criteria().empty();
  detail::check_plane_set(m.cells(), std::string{}, !pooled, tol, r);
  for (const auto& layer : m.criteria()) {
    if (layer.judgments.size() != m.size()) {
      r.violations.push_back({ViolationKind::size, -1, -1, layer.name, "criterion '" + layer.name + "' has wrong size"});
      continue;
    }
    detail::check_plane_set(layer.judgments, layer.name, true, tol, r);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Extent analysis.

template <typename Scalar>
struct SyntheticExtent {
  std::string alternative;
  Tfn<Scalar> extent;

  friend bool operator==(const SyntheticExtent&, const SyntheticExtent&) = default;
};

/// Row sums times the reciprocal of the grand total:
/// S_i = (sum_j l_ij / sum u, sum_j m_ij / sum m, sum_j u_ij / sum l).
/// Operates on the raw planes; callers are responsible for validity.
template <typename Scalar>
std::vector<Tfn<Scalar>> synthetic_extents(const TfnMatrix<Scalar>& m) {
  const auto row_l = m.lower.rowwise().sum().eval();
  const auto row_m = m.modal.rowwise().sum().eval();
  const auto row_u = m.upper.rowwise().sum().eval();
  const Tfn<Scalar> inverse_total = reciprocal(Tfn<Scalar>(m.lower.sum(), m.modal.sum(), m.upper.sum()));
  std::vector<Tfn<Scalar>> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    out.push_back(Tfn<Scalar>(row_l(i), row_m(i), row_u(i)) * inverse_total);
  }
  return out;
}

template <typename Scalar>
std::vector<SyntheticExtent<Scalar>> synthetic_extents(const FuzzyComparisonMatrix<Scalar>& m) {
  if (auto r = validate_matrix(m); !r.ok()) throw InvalidMatrixError(std::move(r));
  auto raw = synthetic_extents(m.cells());
  std::vector<SyntheticExtent<Scalar>> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) out.push_back({m.alternatives()[i], raw[i]});
  return out;
}

/// Unnormalized weights: w'_i = min over j != i of V(S_i >= S_j).
template <typename Scalar>
WeightVector<Scalar> raw_weights(std::span<const SyntheticExtent<Scalar>> extents) {
  if (extents.size() < 2) throw std::invalid_argument("extent analysis needs at least 2 alternatives");
  WeightVector<Scalar> w;
  std::vector<Tfn<Scalar>> others;
  others.reserve(extents.size() - 1);
  for (std::size_t i = 0; i < extents.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < extents.size(); ++j) {
      if (j != i) others.push_back(extents[j].extent);
    }
    w.push_back(extents[i].alternative,
                min_degree_of_possibility(extents[i].extent, std::span<const Tfn<Scalar>>(others)));
  }
  return w;
}

template <typename Scalar>
WeightVector<Scalar> raw_weights(const std::vector<SyntheticExtent<Scalar>>& extents) {
  return raw_weights(std::span<const SyntheticExtent<Scalar>>(extents));
}

/// Every intermediate of one extent-analysis run, kept for reporting.
template <typename Scalar>
struct ExtentAnalysis {
  std::vector<SyntheticExtent<Scalar>> extents;
  WeightVector<Scalar> raw;
  WeightVector<Scalar> weights;
};

template <typename Scalar>
ExtentAnalysis<Scalar> extent_analysis(const FuzzyComparisonMatrix<Scalar>& m) {
  ExtentAnalysis<Scalar> a;
  a.extents = synthetic_extents(m);
  a.raw = raw_weights(a.extents);
  a.weights = normalize(a.raw);
  return a;
}

template <typename Scalar>
WeightVector<Scalar> derive_weights(const FuzzyComparisonMatrix<Scalar>& m) {
  return extent_analysis(m).weights;
}

}  // namespace qoseval
