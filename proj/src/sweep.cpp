#include "irreal/sweep.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <stdexcept>

namespace irreal {

namespace {

constexpr const char* kHeader =
    "p,stage,irreality_plus,irreality_minus,local_irreality_plus,"
    "local_irreality_minus,rbn,purity,linear_entropy,p_dark,"
    "p_at_least_one_dark";

} // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::vector<double> sweep_grid(double p_min, double p_max, int steps) {
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) {
    grid[i] = p_min + (p_max - p_min) * double(i) / double(steps - 1);
  }
  return grid;
}

SweepRecord make_record(int stage, const hardy::HardyConfig& config) {
  const hardy::StageReport report = hardy::stage_report(stage, config);
  const double p_dark = hardy::dark_probability(config.p);
  return {
      .p = config.p,
      .stage = stage,
      .irreality_plus = report.irreality_plus,
      .irreality_minus = report.irreality_minus,
      .local_irreality_plus = report.local_irreality_plus,
      .local_irreality_minus = report.local_irreality_minus,
      .rbn = report.rbn,
      .purity = report.matter_purity,
      .linear_entropy = report.matter_linear_entropy,
      .p_dark = p_dark,
      .p_at_least_one_dark = 3.0 * p_dark,
  };
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  if (!(spec.p_min >= 0.0 && spec.p_max <= 1.0 && spec.p_min <= spec.p_max)) {
    throw std::invalid_argument(
        "sweep needs 0 <= p-min <= p-max <= 1");
  }
  if (spec.steps < 2) {
    throw std::invalid_argument("sweep needs at least 2 steps");
  }
  if (spec.stage && (*spec.stage < 1 || *spec.stage > 4)) {
    throw std::invalid_argument("stage must be in 1..4 or 'all'");
  }

  std::vector<int> stages;
  if (spec.stage) {
    stages = {*spec.stage};
  } else {
    stages = {1, 2, 3, 4};
  }

  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(spec.steps) * stages.size());
  for (const double p : sweep_grid(spec.p_min, spec.p_max, spec.steps)) {
    const hardy::HardyConfig config(p, spec.phi);
    for (const int stage : stages) {
      records.push_back(make_record(stage, config));
    }
  }
  return records;
}

void write_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << kHeader << '\n';
  for (const auto& r : records) {
    out << format_double(r.p) << ',' << r.stage << ','
        << format_double(r.irreality_plus) << ','
        << format_double(r.irreality_minus) << ','
        << format_double(r.local_irreality_plus) << ','
        << format_double(r.local_irreality_minus) << ','
        << format_double(r.rbn) << ',' << format_double(r.purity) << ','
        << format_double(r.linear_entropy) << ','
        << format_double(r.p_dark) << ','
        << format_double(r.p_at_least_one_dark) << '\n';
  }
}

void write_json(std::ostream& out, std::span<const SweepRecord> records) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    rows.push_back({
        {"p", r.p},
        {"stage", r.stage},
        {"irreality_plus", r.irreality_plus},
        {"irreality_minus", r.irreality_minus},
        {"local_irreality_plus", r.local_irreality_plus},
        {"local_irreality_minus", r.local_irreality_minus},
        {"rbn", r.rbn},
        {"purity", r.purity},
        {"linear_entropy", r.linear_entropy},
        {"p_dark", r.p_dark},
        {"p_at_least_one_dark", r.p_at_least_one_dark},
    });
  }
  out << rows.dump(2) << '\n';
}

}  // namespace irreal
