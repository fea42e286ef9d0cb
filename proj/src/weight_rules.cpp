#include "qoseval/weight_rules.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qoseval {

ServiceCategoryPolicy ServiceCategoryPolicy::defaults() {
  return {{{"health", 1}, {"education", 3}, {"business", 4}, {"entertainment", 5}}};
}

bool ServiceCategoryPolicy::contains(const std::string& name) const {
  return std::any_of(categories.begin(), categories.end(), [&](const Entry& e) { return e.name == name; });
}

int ServiceCategoryPolicy::rank_of(const std::string& name) const {
  for (const auto& e : categories) {
    if (e.name == name) return e.rank;
  }
  throw std::invalid_argument(fmt::format("unknown service category '{}'", name));
}

void ServiceCategoryPolicy::validate() const {
  if (categories.empty()) throw std::invalid_argument("service category policy is empty");
  std::set<std::string> names;
  std::set<int> ranks;
  for (const auto& e : categories) {
    if (e.rank < 1) throw std::invalid_argument(fmt::format("category '{}' has non-positive rank {}", e.name, e.rank));
    if (!names.insert(e.name).second) throw std::invalid_argument(fmt::format("duplicate category '{}'", e.name));
    if (!ranks.insert(e.rank).second) throw std::invalid_argument(fmt::format("duplicate category rank {}", e.rank));
  }
}

const char* to_string(Criterion c) {
  return c == Criterion::purpose_of_usage ? "purpose-of-usage" : "number-of-users";
}

std::optional<Criterion> parse_criterion(const std::string& s) {
  if (s == "purpose-of-usage" || s == "purpose") return Criterion::purpose_of_usage;
  if (s == "number-of-users" || s == "users") return Criterion::number_of_users;
  return std::nullopt;
}

void WeightRuleConfig::validate() const {
  policy.validate();
  for (std::size_t i = 0; i < user_ratio_buckets.size(); ++i) {
    const auto& b = user_ratio_buckets[i];
    if (!(b.ratio >= 1.0)) throw std::invalid_argument(fmt::format("user ratio bound {} must be >= 1", b.ratio));
    if (b.scale < 1 || b.scale > 9) throw std::invalid_argument(fmt::format("scale index {} not in 1..9", b.scale));
    if (i > 0 && !(b.ratio > user_ratio_buckets[i - 1].ratio)) {
      throw std::invalid_argument("user ratio bucket thresholds must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < rank_delta_scale.size(); ++i) {
    const auto& s = rank_delta_scale[i];
    if (s.delta < 1) throw std::invalid_argument(fmt::format("rank delta {} must be >= 1", s.delta));
    if (s.scale < 1 || s.scale > 9) throw std::invalid_argument(fmt::format("scale index {} not in 1..9", s.scale));
    if (i > 0 && s.delta <= rank_delta_scale[i - 1].delta) {
      throw std::invalid_argument("rank delta steps must be strictly increasing");
    }
  }
}

Tfn<double> purpose_judgment(const std::string& category_i, const std::string& category_j,
                             const WeightRuleConfig& cfg) {
  const int rank_i = cfg.policy.rank_of(category_i);
  const int rank_j = cfg.policy.rank_of(category_j);
  if (rank_i > rank_j) return reciprocal(purpose_judgment(category_j, category_i, cfg));
  const int delta = rank_j - rank_i;
  int index = 1;
  for (const auto& step : cfg.rank_delta_scale) {
    if (delta >= step.delta) index = step.scale;
  }
  return scale(index);
}

Tfn<double> users_judgment(std::int64_t users_i, std::int64_t users_j, const WeightRuleConfig& cfg) {
  if (users_i < 0 || users_j < 0) throw std::invalid_argument("user counts must be nonnegative");
  if (users_i == 0 && users_j == 0) throw std::invalid_argument("user counts are both zero");
  if (users_i < users_j) return reciprocal(users_judgment(users_j, users_i, cfg));
  const double ratio =
      static_cast<double>(std::max<std::int64_t>(users_i, 1)) / static_cast<double>(std::max<std::int64_t>(users_j, 1));
  int index = 1;
  for (const auto& bucket : cfg.user_ratio_buckets) {
    if (ratio >= bucket.ratio) index = bucket.scale;
  }
  return scale(index);
}

std::optional<Tfn<double>> find_override(const WeightRuleConfig& cfg, Criterion criterion, const std::string& i,
                                         const std::string& j) {
  std::optional<Tfn<double>> found;
  for (const auto& o : cfg.overrides) {
    if (o.criterion && *o.criterion != criterion) continue;
    if (o.from == i && o.to == j) {
      found = o.judgment;
    } else if (o.from == j && o.to == i) {
      found = reciprocal(o.judgment);
    }
  }
  return found;
}

FuzzyComparisonMatrix<double> build_application_matrix(const std::vector<ApplicationContext>& apps,
                                                       const WeightRuleConfig& cfg) {
  if (apps.size() < 2) throw std::invalid_argument("an application comparison matrix needs at least 2 applications");
  const auto n = static_cast<Eigen::Index>(apps.size());
  TfnMatrix<double> purpose(n);
  TfnMatrix<double> users(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& a = apps[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto& b = apps[static_cast<std::size_t>(j)];
      auto p = find_override(cfg, Criterion::purpose_of_usage, a.id, b.id);
      purpose.set_pair(i, j, p ? *p : purpose_judgment(a.category, b.category, cfg));
      auto u = find_override(cfg, Criterion::number_of_users, a.id, b.id);
      users.set_pair(i, j, u ? *u : users_judgment(a.users, b.users, cfg));
    }
  }
  std::vector<std::string> ids;
  ids.reserve(apps.size());
  for (const auto& a : apps) ids.push_back(a.id);
  return FuzzyComparisonMatrix<double>::from_criteria(
      std::move(ids), {{to_string(Criterion::purpose_of_usage), std::move(purpose)},
                       {to_string(Criterion::number_of_users), std::move(users)}});
}

}  // namespace qoseval
