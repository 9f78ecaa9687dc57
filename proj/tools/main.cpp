// Command-line front end: parameter sweeps over the annihilation
// probability, the verification battery, and detector statistics.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "irreal/hardy.hpp"
#include "irreal/sweep.hpp"
#include "irreal/verify.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

// Writes through to a file when requested, otherwise to stdout.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.emplace(path, std::ios::binary);
      if (!file_->is_open()) {
        throw std::runtime_error("cannot open output file '" + path + "'");
      }
    }
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  void finish() {
    if (file_) {
      file_->flush();
      if (!file_->good()) {
        throw std::runtime_error("writing output failed");
      }
    }
  }

 private:
  std::optional<std::ofstream> file_;
};

irreal::SweepSpec::Format parse_format(const std::string& name) {
  if (name == "csv") {
    return irreal::SweepSpec::Format::csv;
  }
  if (name == "json") {
    return irreal::SweepSpec::Format::json;
  }
  throw std::runtime_error("unknown format '" + name + "' (csv or json)");
}

int run_sweep_command(const irreal::SweepSpec& spec,
                      const std::string& output) {
  const std::vector<irreal::SweepRecord> records = irreal::run_sweep(spec);
  OutputTarget target(output);
  if (spec.format == irreal::SweepSpec::Format::csv) {
    irreal::write_csv(target.stream(), records);
  } else {
    irreal::write_json(target.stream(), records);
  }
  target.finish();
  return kExitSuccess;
}

int run_verify_command(const irreal::VerifyOptions& options) {
  const irreal::VerifyReport report = irreal::run_verification(options);
  irreal::print_report(std::cout, report);
  return report.all_passed ? kExitSuccess : kExitVerifyFailure;
}

int run_distribution_command(double p, double phi,
                             irreal::SweepSpec::Format format,
                             const std::string& output) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::runtime_error("p must lie in [0,1]");
  }
  const irreal::hardy::DetectionDistribution dist =
      irreal::hardy::detection_distribution(irreal::hardy::HardyConfig(p, phi));
  const double p_dark = irreal::hardy::dark_probability(p);

  OutputTarget target(output);
  if (format == irreal::SweepSpec::Format::csv) {
    target.stream()
        << "p,phi,prob_xplus_xminus,prob_xplus_yminus,prob_yplus_xminus,"
           "prob_yplus_yminus,prob_annihilation,p_dark,p_at_least_one_dark\n"
        << irreal::format_double(p) << ',' << irreal::format_double(phi) << ','
        << irreal::format_double(dist.xplus_xminus) << ','
        << irreal::format_double(dist.xplus_yminus) << ','
        << irreal::format_double(dist.yplus_xminus) << ','
        << irreal::format_double(dist.yplus_yminus) << ','
        << irreal::format_double(dist.annihilation) << ','
        << irreal::format_double(p_dark) << ','
        << irreal::format_double(3.0 * p_dark) << '\n';
  } else {
    const nlohmann::ordered_json row = {
        {"p", p},
        {"phi", phi},
        {"prob_xplus_xminus", dist.xplus_xminus},
        {"prob_xplus_yminus", dist.xplus_yminus},
        {"prob_yplus_xminus", dist.yplus_xminus},
        {"prob_yplus_yminus", dist.yplus_yminus},
        {"prob_annihilation", dist.annihilation},
        {"p_dark", p_dark},
        {"p_at_least_one_dark", 3.0 * p_dark},
    };
    target.stream() << row.dump(2) << '\n';
  }
  target.finish();
  return kExitSuccess;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-based realism metrics for a two-interferometer "
               "annihilation experiment"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "Tabulate the stage metrics over a grid of p values");
  irreal::SweepSpec spec;
  std::string stage_arg = "all";
  std::string format_arg = "csv";
  std::string output_arg = "-";
  sweep->add_option("--p-min", spec.p_min, "Lower end of the p grid")
      ->capture_default_str();
  sweep->add_option("--p-max", spec.p_max, "Upper end of the p grid")
      ->capture_default_str();
  sweep->add_option("--steps", spec.steps, "Grid points, endpoints included")
      ->capture_default_str();
  sweep->add_option("--stage", stage_arg, "Stage 1..4 or 'all'")
      ->capture_default_str();
  sweep->add_option("--phi", spec.phi, "Interaction phase")
      ->capture_default_str();
  sweep->add_option("--format", format_arg, "csv or json")
      ->capture_default_str();
  sweep->add_option("--output", output_arg, "Output file, '-' for stdout")
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Run every invariant and analytic cross-check");
  std::optional<double> tolerance_override;
  std::uint64_t seed = irreal::VerifyOptions{}.seed;
  verify->add_option("--tolerance", tolerance_override,
                     "Override every check tolerance");
  verify->add_option("--seed", seed, "Seed for the randomized checks")
      ->capture_default_str();

  // distribution
  auto* distribution = app.add_subcommand(
      "distribution", "Detector click probabilities for one p value");
  double dist_p = 0.0;
  double dist_phi = 0.0;
  std::string dist_format_arg = "csv";
  std::string dist_output_arg = "-";
  distribution->add_option("p", dist_p, "Annihilation probability in [0,1]")
      ->required();
  distribution->add_option("--phi", dist_phi, "Interaction phase")
      ->capture_default_str();
  distribution->add_option("--format", dist_format_arg, "csv or json")
      ->capture_default_str();
  distribution
      ->add_option("--output", dist_output_arg, "Output file, '-' for stdout")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (sweep->parsed()) {
      if (stage_arg != "all") {
        std::size_t consumed = 0;
        spec.stage = std::stoi(stage_arg, &consumed);
        if (consumed != stage_arg.size()) {
          throw std::runtime_error("stage must be in 1..4 or 'all'");
        }
      }
      spec.format = parse_format(format_arg);
      return run_sweep_command(spec, output_arg);
    }
    if (verify->parsed()) {
      irreal::VerifyOptions options;
      options.tolerance_override = tolerance_override;
      options.seed = seed;
      return run_verify_command(options);
    }
    if (distribution->parsed()) {
      return run_distribution_command(dist_p, dist_phi,
                                      parse_format(dist_format_arg),
                                      dist_output_arg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
