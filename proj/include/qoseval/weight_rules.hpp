#pragma once

#include "qoseval/fahp.hpp"
#include "qoseval/tfn.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qoseval {

/// Service categories ranked by importance; rank 1 is the most important.
struct ServiceCategoryPolicy {
  struct Entry {
    std::string name;
    int rank;
  };
  std::vector<Entry> categories;

  /// health 1, education 3, business 4, entertainment 5.
  static ServiceCategoryPolicy defaults();

  bool contains(const std::string& name) const;
  int rank_of(const std::string& name) const;
  void validate() const;
};

enum class Criterion { purpose_of_usage, number_of_users };

const char* to_string(Criterion c);
std::optional<Criterion> parse_criterion(const std::string& s);

/// Operator-supplied judgment for the ordered pair (from, to). Without a
/// criterion it replaces the rule-derived judgment on every criterion.
struct JudgmentOverride {
  std::optional<Criterion> criterion;
  std::string from;
  std::string to;
  Tfn<double> judgment;
};

struct WeightRuleConfig {
  /// Ratio lower bound -> scale index; ratios below the first bound map to k1.
  struct RatioBucket {
    double ratio;
    int scale;
  };
  /// Rank gap -> scale index; gaps beyond the last entry use the last entry.
  struct RankStep {
    int delta;
    int scale;
  };

  ServiceCategoryPolicy policy = ServiceCategoryPolicy::defaults();
  std::vector<RatioBucket> user_ratio_buckets{{1.25, 3}, {2.0, 5}, {3.0, 7}, {4.0, 9}};
  std::vector<RankStep> rank_delta_scale{{1, 3}, {2, 5}, {3, 7}, {4, 9}};
  std::vector<JudgmentOverride> overrides;

  void validate() const;
};

struct ApplicationContext {
  std::string id;
  std::string category;
  std::int64_t users = 0;
};

/// Purpose-of-usage judgment of application i over j from their category ranks.
Tfn<double> purpose_judgment(const std::string& category_i, const std::string& category_j,
                             const WeightRuleConfig& cfg);

/// Number-of-users judgment from the ratio max(n_i,1)/max(n_j,1).
Tfn<double> users_judgment(std::int64_t users_i, std::int64_t users_j, const WeightRuleConfig& cfg);

/// Explicit override for (criterion, i, j), reciprocal when given as (j, i). Last match wins.
std::optional<Tfn<double>> find_override(const WeightRuleConfig& cfg, Criterion criterion, const std::string& i,
                                         const std::string& j);

/// Pooled comparison matrix with one layer per criterion; each layer is
/// filled over the upper triangle and mirrored by reciprocals.
FuzzyComparisonMatrix<double> build_application_matrix(const std::vector<ApplicationContext>& apps,
                                                       const WeightRuleConfig& cfg);

}  // namespace qoseval
