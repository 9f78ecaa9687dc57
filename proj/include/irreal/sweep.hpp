#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "irreal/hardy.hpp"

namespace irreal {

struct SweepSpec {
  double p_min = 0.0;
  double p_max = 1.0;
  int steps = 201;
  std::optional<int> stage; // nullopt = all four stages
  double phi = 0.0;

  enum class Format { csv, json };
  Format format = Format::csv;
};

/// One output row: every number the CLI exports for a (p, stage) pair.
struct SweepRecord {
  double p;
  int stage;
  double irreality_plus;
  double irreality_minus;
  double local_irreality_plus;
  double local_irreality_minus;
  double rbn;
  double purity;
  double linear_entropy;
  double p_dark;
  double p_at_least_one_dark;
};

/// Uniform grid including both endpoints.
std::vector<double> sweep_grid(double p_min, double p_max, int steps);

SweepRecord make_record(int stage, const hardy::HardyConfig& config);

/// Records ordered by p, then stage. Throws std::invalid_argument on a
/// malformed spec (range, steps < 2, stage outside 1..4).
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

void write_csv(std::ostream& out, std::span<const SweepRecord> records);
void write_json(std::ostream& out, std::span<const SweepRecord> records);

/// 17 significant digits; round-trips doubles exactly.
std::string format_double(double value);

}  // namespace irreal
