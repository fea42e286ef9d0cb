#include "qoseval/cli.hpp"

#include "qoseval/config.hpp"
#include "qoseval/evaluate.hpp"
#include "qoseval/measurements.hpp"
#include "qoseval/report.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qoseval {

namespace {

std::string weights_text(const NetworkConfiguration& cfg) {
  std::string out = fmt::format("Application weights for network {}\n", cfg.network_id);
  std::vector<std::string> warnings;
  for (const auto& ran : cfg.rans) {
    out += fmt::format("\nRAN {} ({})\n", ran.id, ran.technology);
    const auto w = weigh_applications(cfg, ran, application_contexts(ran), warnings);
    if (w.matrix) {
      out += render_matrix(*w.matrix);
    } else {
      std::string s;
      for (Eigen::Index i = 0; i < w.weights.size(); ++i) {
        s += fmt::format("{}{} {:.3f}", s.empty() ? "" : "  ", w.weights.keys[static_cast<std::size_t>(i)],
                         w.weights.values(i));
      }
      out += fmt::format("  weights ({}): {}\n", to_string(w.source), s);
    }
  }
  out += "\nparameter weights by class:\n";
  for (const auto& [cls, w] : cfg.parameter_weights) {
    std::string s;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      s += fmt::format("{}{} {:.3f}", s.empty() ? "" : "  ", w.keys[static_cast<std::size_t>(i)], w.values(i));
    }
    out += fmt::format("  {:<6} {}\n", cls, s);
  }
  for (const auto& w : warnings) out += fmt::format("warning: {}\n", w);
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Application-weighted QoS evaluation for heterogeneous networks", "qoseval"};
  app.require_subcommand(1);

  std::string config_path;
  std::string measurements_path;
  std::string format = "text";
  std::vector<std::string> directive;

  auto* validate_cmd = app.add_subcommand("validate", "Check a configuration file");
  validate_cmd->add_option("config", config_path, "Configuration JSON")->required();

  auto* weights_cmd = app.add_subcommand("weights", "Print derived comparison matrices and weight vectors");
  weights_cmd->add_option("config", config_path, "Configuration JSON")->required();

  const std::map<std::string, std::string> formats{{"text", "text"}, {"json", "json"}};
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate unified QoS metrics");
  evaluate_cmd->add_option("config", config_path, "Configuration JSON")->required();
  evaluate_cmd->add_option("measurements", measurements_path, "Measurements CSV")->required();
  evaluate_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

  auto* whatif_cmd = app.add_subcommand("whatif", "Re-evaluate with one importance judgment overridden");
  whatif_cmd->add_option("config", config_path, "Configuration JSON")->required();
  whatif_cmd->add_option("measurements", measurements_path, "Measurements CSV")->required();
  whatif_cmd->add_option("--set", directive, "<app> <scale> <app>, e.g. --set voice extreme vs")
      ->expected(3)
      ->required();
  whatif_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    const int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kExitOk : kExitValidation;
  }

  const auto fmt_kind = format == "json" ? ReportFormat::json : ReportFormat::text;
  try {
    const auto cfg = load_config(config_path);
    if (*validate_cmd) {
      out << fmt::format("{}: valid ({} RANs", config_path, cfg.rans.size());
      std::size_t apps = 0;
      for (const auto& r : cfg.rans) apps += r.applications.size();
      out << fmt::format(", {} applications)\n", apps);
      return kExitOk;
    }
    if (*weights_cmd) {
      out << weights_text(cfg);
      return kExitOk;
    }
    const auto measurements = load_measurements(measurements_path, cfg);
    if (*evaluate_cmd) {
      out << render(evaluate(cfg, measurements), fmt_kind);
      return kExitOk;
    }
    const auto d = parse_directive(directive.at(0), directive.at(1), directive.at(2));
    out << render(whatif(cfg, measurements, d), fmt_kind);
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace qoseval
