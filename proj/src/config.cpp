#include "qoseval/config.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>
#include <set>

namespace qoseval {

using nlohmann::json;

const char* to_string(AppClass c) {
  switch (c) {
    case AppClass::vc: return "vc";
    case AppClass::voice: return "voice";
    case AppClass::vs: return "vs";
    case AppClass::other: return "other";
  }
  return "other";
}

std::optional<AppClass> parse_app_class(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "vc") return AppClass::vc;
  if (s == "voice") return AppClass::voice;
  if (s == "vs") return AppClass::vs;
  if (s == "other") return AppClass::other;
  return std::nullopt;
}

const char* profile_family(AppClass c) {
  switch (c) {
    case AppClass::voice: return "voice";
    case AppClass::vc:
    case AppClass::vs: return "video";
    case AppClass::other: return "";
  }
  return "";
}

const char* to_string(RanWeighting w) { return w == RanWeighting::uniform ? "uniform" : "users"; }

const ApplicationConfig* RanConfig::find(const std::string& app_id) const {
  for (const auto& a : applications) {
    if (a.id == app_id) return &a;
  }
  return nullptr;
}

const RanConfig* NetworkConfiguration::find_ran(const std::string& ran_id) const {
  for (const auto& r : rans) {
    if (r.id == ran_id) return &r;
  }
  return nullptr;
}

bool NetworkConfiguration::has_application(const std::string& app_id) const {
  return std::any_of(rans.begin(), rans.end(), [&](const RanConfig& r) { return r.find(app_id) != nullptr; });
}

std::vector<ApplicationContext> application_contexts(const RanConfig& ran) {
  std::vector<ApplicationContext> out;
  out.reserve(ran.applications.size());
  for (const auto& a : ran.applications) out.push_back({a.id, a.category, a.users});
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(fmt::format("{}: {}", path, what));
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      fail(path + "." + key, "unknown field");
    }
  }
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "required field missing");
  return *it;
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  auto s = v.get<std::string>();
  if (s.empty()) fail(path, "must not be empty");
  return s;
}

double get_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

std::int64_t get_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

Tfn<double> get_judgment(const json& o, const std::string& path) {
  const bool has_scale = o.contains("scale");
  const bool has_tfn = o.contains("tfn");
  if (has_scale == has_tfn) fail(path, "exactly one of 'scale' or 'tfn' is required");
  if (has_scale) {
    const auto& s = o.at("scale");
    if (s.is_number_integer()) {
      const auto idx = s.get<int>();
      if (idx < 1 || idx > 9) fail(path + ".scale", "scale index must be in 1..9");
      return scale(idx);
    }
    const auto token = get_string(s, path + ".scale");
    auto idx = parse_scale(token);
    if (!idx) fail(path + ".scale", fmt::format("unknown importance scale '{}'", token));
    return scale(*idx);
  }
  const auto& t = o.at("tfn");
  if (!t.is_array() || t.size() != 3) fail(path + ".tfn", "expected [l, m, u]");
  try {
    return {get_number(t[0], path + ".tfn[0]"), get_number(t[1], path + ".tfn[1]"),
            get_number(t[2], path + ".tfn[2]")};
  } catch (const std::invalid_argument& e) {
    fail(path + ".tfn", e.what());
  }
}

/// Object of key -> nonnegative number, as a weight vector (not normalized).
WeightVector<double> get_weights(const json& v, const std::string& path) {
  if (!v.is_object() || v.empty()) fail(path, "expected a non-empty object of weights");
  WeightVector<double> w;
  for (const auto& [key, value] : v.items()) {
    const double x = get_number(value, path + "." + key);
    if (!(x >= 0.0) || !std::isfinite(x)) fail(path + "." + key, "weight must be finite and nonnegative");
    w.push_back(key, x);
  }
  if (!(w.values.sum() > 0.0)) fail(path, "weights must not all be zero");
  return w;
}

WeightRuleConfig parse_weight_rules(const json& j, const std::string& path) {
  WeightRuleConfig cfg;
  check_keys(j, path, {"categories", "user_ratio_buckets", "rank_delta_scale", "overrides"});
  if (auto it = j.find("categories"); it != j.end()) {
    const auto p = path + ".categories";
    if (!it->is_array() || it->empty()) fail(p, "expected a non-empty array");
    cfg.policy.categories.clear();
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto ep = fmt::format("{}[{}]", p, i);
      const auto& e = (*it)[i];
      check_keys(e, ep, {"name", "rank"});
      const auto rank = get_integer(require(e, "rank", ep), ep + ".rank");
      if (rank < 1) fail(ep + ".rank", "rank must be a positive integer");
      cfg.policy.categories.push_back({get_string(require(e, "name", ep), ep + ".name"), static_cast<int>(rank)});
    }
  }
  if (auto it = j.find("user_ratio_buckets"); it != j.end()) {
    const auto p = path + ".user_ratio_buckets";
    if (!it->is_array()) fail(p, "expected an array");
    cfg.user_ratio_buckets.clear();
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto ep = fmt::format("{}[{}]", p, i);
      const auto& e = (*it)[i];
      check_keys(e, ep, {"ratio", "scale"});
      cfg.user_ratio_buckets.push_back({get_number(require(e, "ratio", ep), ep + ".ratio"),
                                        static_cast<int>(get_integer(require(e, "scale", ep), ep + ".scale"))});
    }
  }
  if (auto it = j.find("rank_delta_scale"); it != j.end()) {
    const auto p = path + ".rank_delta_scale";
    if (!it->is_array()) fail(p, "expected an array");
    cfg.rank_delta_scale.clear();
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto ep = fmt::format("{}[{}]", p, i);
      const auto& e = (*it)[i];
      check_keys(e, ep, {"delta", "scale"});
      cfg.rank_delta_scale.push_back({static_cast<int>(get_integer(require(e, "delta", ep), ep + ".delta")),
                                      static_cast<int>(get_integer(require(e, "scale", ep), ep + ".scale"))});
    }
  }
  if (auto it = j.find("overrides"); it != j.end()) {
    const auto p = path + ".overrides";
    if (!it->is_array()) fail(p, "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto ep = fmt::format("{}[{}]", p, i);
      const auto& e = (*it)[i];
      check_keys(e, ep, {"from", "to", "criterion", "scale", "tfn"});
      JudgmentOverride o{std::nullopt, get_string(require(e, "from", ep), ep + ".from"),
                         get_string(require(e, "to", ep), ep + ".to"), get_judgment(e, ep)};
      if (auto c = e.find("criterion"); c != e.end()) {
        const auto name = get_string(*c, ep + ".criterion");
        o.criterion = parse_criterion(name);
        if (!o.criterion) fail(ep + ".criterion", fmt::format("unknown criterion '{}'", name));
      }
      if (o.from == o.to) fail(ep, "an override must compare two different applications");
      cfg.overrides.push_back(std::move(o));
    }
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return cfg;
}

ProfileSet parse_profile_set(const json& j, const std::string& path, ProfileSet base) {
  if (!j.is_object()) fail(path, "expected an object keyed by parameter");
  for (const auto& [key, value] : j.items()) {
    const auto pp = path + "." + key;
    const auto parameter = parse_parameter(key);
    if (!parameter) fail(pp, "unknown parameter");
    check_keys(value, pp, {"best", "worst", "direction"});
    ParameterProfile<double> profile{*parameter, natural_direction(*parameter),
                                     get_number(require(value, "best", pp), pp + ".best"),
                                     get_number(require(value, "worst", pp), pp + ".worst")};
    if (auto d = value.find("direction"); d != value.end()) {
      const auto name = get_string(*d, pp + ".direction");
      auto dir = parse_direction(name);
      if (!dir) fail(pp + ".direction", fmt::format("unknown direction '{}'", name));
      profile.direction = *dir;
    }
    try {
      profile.validate();
    } catch (const std::invalid_argument& e) {
      fail(pp, e.what());
    }
    base[*parameter] = profile;
  }
  return base;
}

ProfileSet default_profile_set(AppClass c) {
  ProfileSet s;
  for (const auto& p : default_profiles<double>(profile_family(c))) s[p.parameter] = p;
  return s;
}

ApplicationConfig parse_application(const json& j, const std::string& path) {
  check_keys(j, path, {"id", "class", "category", "users", "qos_metric"});
  ApplicationConfig a;
  a.id = get_string(require(j, "id", path), path + ".id");
  const auto cls = get_string(require(j, "class", path), path + ".class");
  auto parsed = parse_app_class(cls);
  if (!parsed) fail(path + ".class", fmt::format("unknown application class '{}'", cls));
  a.app_class = *parsed;
  a.category = get_string(require(j, "category", path), path + ".category");
  a.users = get_integer(require(j, "users", path), path + ".users");
  if (a.users < 0) fail(path + ".users", "user count must be nonnegative");
  if (auto it = j.find("qos_metric"); it != j.end()) {
    const double q = get_number(*it, path + ".qos_metric");
    if (!(q >= 0.0 && q <= 1.0)) fail(path + ".qos_metric", "injected metric must lie in [0,1]");
    a.qos_metric = q;
  }
  return a;
}

RanConfig parse_ran(const json& j, const std::string& path) {
  check_keys(j, path, {"id", "technology", "applications", "application_weights"});
  RanConfig r;
  r.id = get_string(require(j, "id", path), path + ".id");
  if (auto it = j.find("technology"); it != j.end()) r.technology = get_string(*it, path + ".technology");
  const auto& apps = require(j, "applications", path);
  const auto ap = path + ".applications";
  if (!apps.is_array() || apps.empty()) fail(ap, "expected a non-empty array");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < apps.size(); ++i) {
    const auto ep = fmt::format("{}[{}]", ap, i);
    auto a = parse_application(apps[i], ep);
    if (!ids.insert(a.id).second) fail(ep + ".id", fmt::format("duplicate application id '{}'", a.id));
    r.applications.push_back(std::move(a));
  }
  if (auto it = j.find("application_weights"); it != j.end()) {
    const auto wp = path + ".application_weights";
    auto w = get_weights(*it, wp);
    for (const auto& k : w.keys) {
      if (!r.find(k)) fail(wp + "." + k, fmt::format("unknown application '{}'", k));
    }
    r.application_weights = std::move(w);
  }
  return r;
}

}  // namespace

void validate_config(const NetworkConfiguration& cfg) {
  if (cfg.schema_version != kConfigSchemaVersion) {
    fail("schema_version", fmt::format("unsupported schema version {}", cfg.schema_version));
  }
  if (cfg.rans.empty()) fail("network.rans", "at least one RAN is required");
  try {
    cfg.weight_rules.validate();
    cfg.thresholds.validate();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  std::set<std::string> ran_ids;
  for (std::size_t r = 0; r < cfg.rans.size(); ++r) {
    const auto& ran = cfg.rans[r];
    const auto rp = fmt::format("network.rans[{}]", r);
    if (!ran_ids.insert(ran.id).second) fail(rp + ".id", fmt::format("duplicate RAN id '{}'", ran.id));
    std::set<std::string> app_ids;
    for (std::size_t a = 0; a < ran.applications.size(); ++a) {
      const auto& app = ran.applications[a];
      const auto ap = fmt::format("{}.applications[{}]", rp, a);
      if (!app_ids.insert(app.id).second) fail(ap + ".id", fmt::format("duplicate application id '{}'", app.id));
      if (!cfg.weight_rules.policy.contains(app.category)) {
        fail(ap + ".category", fmt::format("unknown service category '{}'", app.category));
      }
      if (app.users < 0) fail(ap + ".users", "user count must be nonnegative");
    }
  }
  for (std::size_t i = 0; i < cfg.weight_rules.overrides.size(); ++i) {
    const auto& o = cfg.weight_rules.overrides[i];
    const auto op = fmt::format("weight_rules.overrides[{}]", i);
    if (!cfg.has_application(o.from)) fail(op + ".from", fmt::format("unknown application '{}'", o.from));
    if (!cfg.has_application(o.to)) fail(op + ".to", fmt::format("unknown application '{}'", o.to));
  }
  if (cfg.ran_weights) {
    for (const auto& k : cfg.ran_weights->keys) {
      if (!cfg.find_ran(k)) fail("ran_weights." + k, fmt::format("unknown RAN '{}'", k));
    }
  }
}

NetworkConfiguration parse_config(const json& doc) {
  check_keys(doc, "$", {"schema_version", "network", "weight_rules", "profiles", "parameter_weights", "thresholds",
                        "ran_weighting", "ran_weights"});
  NetworkConfiguration cfg;
  cfg.schema_version = static_cast<int>(get_integer(require(doc, "schema_version", "$"), "schema_version"));
  if (cfg.schema_version != kConfigSchemaVersion) {
    fail("schema_version", fmt::format("unsupported schema version {}", cfg.schema_version));
  }

  const auto& net = require(doc, "network", "$");
  check_keys(net, "network", {"id", "rans"});
  cfg.network_id = get_string(require(net, "id", "network"), "network.id");
  const auto& rans = require(net, "rans", "network");
  if (!rans.is_array() || rans.empty()) fail("network.rans", "expected a non-empty array");
  for (std::size_t i = 0; i < rans.size(); ++i) cfg.rans.push_back(parse_ran(rans[i], fmt::format("network.rans[{}]", i)));

  if (auto it = doc.find("weight_rules"); it != doc.end()) cfg.weight_rules = parse_weight_rules(*it, "weight_rules");

  for (auto c : {AppClass::vc, AppClass::voice, AppClass::vs}) cfg.profiles[to_string(c)] = default_profile_set(c);
  if (auto it = doc.find("profiles"); it != doc.end()) {
    if (!it->is_object()) fail("profiles", "expected an object keyed by application class");
    for (const auto& [key, value] : it->items()) {
      auto cls = parse_app_class(key);
      if (!cls) fail("profiles." + key, "unknown application class");
      const std::string name = to_string(*cls);
      cfg.profiles[name] = parse_profile_set(value, "profiles." + key, cfg.profiles[name]);
    }
  }

  const auto default_weights = default_parameter_weights<double>();
  for (auto c : {AppClass::vc, AppClass::voice, AppClass::vs, AppClass::other}) {
    cfg.parameter_weights[to_string(c)] = default_weights;
  }
  if (auto it = doc.find("parameter_weights"); it != doc.end()) {
    if (!it->is_object()) fail("parameter_weights", "expected an object keyed by application class");
    for (const auto& [key, value] : it->items()) {
      auto cls = parse_app_class(key);
      if (!cls) fail("parameter_weights." + key, "unknown application class");
      auto w = get_weights(value, "parameter_weights." + key);
      for (const auto& p : w.keys) {
        if (!parse_parameter(p)) fail("parameter_weights." + key + "." + p, "unknown parameter");
      }
      cfg.parameter_weights[to_string(*cls)] = normalize(w);
    }
  }

  if (auto it = doc.find("thresholds"); it != doc.end()) {
    check_keys(*it, "thresholds", {"good", "average"});
    if (auto g = it->find("good"); g != it->end()) cfg.thresholds.good = get_number(*g, "thresholds.good");
    if (auto a = it->find("average"); a != it->end()) cfg.thresholds.average = get_number(*a, "thresholds.average");
    try {
      cfg.thresholds.validate();
    } catch (const std::invalid_argument& e) {
      fail("thresholds", e.what());
    }
  }

  if (auto it = doc.find("ran_weighting"); it != doc.end()) {
    const auto name = get_string(*it, "ran_weighting");
    if (name == "uniform") {
      cfg.ran_weighting = RanWeighting::uniform;
    } else if (name == "users") {
      cfg.ran_weighting = RanWeighting::users;
    } else {
      fail("ran_weighting", fmt::format("unknown RAN weighting '{}'", name));
    }
  }
  if (auto it = doc.find("ran_weights"); it != doc.end()) cfg.ran_weights = get_weights(*it, "ran_weights");

  validate_config(cfg);
  return cfg;
}

NetworkConfiguration load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open configuration '{}'", path.string()));
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(fmt::format("{}: JSON parse error: {}", path.string(), e.what()));
  }
  return parse_config(doc);
}

}  // namespace qoseval
