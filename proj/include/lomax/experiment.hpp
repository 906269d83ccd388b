#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lomax/generators.hpp"
#include "lomax/graph.hpp"

namespace lomax {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Declarative experiment description, read from a plain key-value file:
///
///   family = er:n=100,p=0.1      # repeatable
///   instances = 30
///   seed = 42                    # LOMAX_SEED env var overrides
///   threads = 0                  # 0 = hardware concurrency
///   out_dir = results
///   table = 1                    # repeatable: 1, 2, ga
///   ga_pool = 20
///   ga_max_size = 6
///   ga_iterations = 300
struct ExperimentConfig {
  std::vector<GeneratorSpec> families;
  int instances = 30;
  bool table1 = false;
  bool table2 = false;
  bool ga_comparison = false;
  std::uint64_t master_seed = 0;
  std::string out_dir = "results";
  int threads = 0;
  int ga_pool = 20;
  int ga_max_size = 6;
  int ga_iterations = 300;

  static ExperimentConfig parse(std::istream& in);
  static ExperimentConfig load(const std::string& path);  // applies LOMAX_SEED
};

/// One solved instance; percentage fields are relative to the key vertex's
/// original load and undefined when that load is zero.
struct InstanceRecord {
  std::string family;
  int index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  Vertex key = -1;
  std::int64_t original_load = 0;
  std::int64_t best_effect = 0;
  double best_pct = 0.0;
  double avg_pct = 0.0;
  bool pct_valid = false;
  int positive_count = 0;
  int near_optimal_count = 0;  // effect >= 75% of the largest effect
  long long evaluations = 0;
  double wall_ms = 0.0;
};

struct AggregateRow {
  std::string family;
  std::string metric;
  int count = 0;
  double min = 0.0, median = 0.0, mean = 0.0, max = 0.0;
};

struct ExperimentResult {
  std::vector<InstanceRecord> rows;
  std::vector<AggregateRow> aggregates;
};

/// Brute-force solve of every configured instance, parallel over instances,
/// deterministically ordered by (family index, instance index).
std::vector<InstanceRecord> solve_corpus(const ExperimentConfig& config);

/// Load-effect table: per-family min/median/mean/max of original load,
/// average % effect and best % effect.
ExperimentResult run_table1(const ExperimentConfig& config);

/// Prevalence table: per-family statistics of positive-effect counts and
/// near-optimal counts.
ExperimentResult run_table2(const ExperimentConfig& config);

struct GaSeriesRow {
  std::string family;
  int iteration = 0;
  double mean_ga = 0.0;
  double mean_rs = 0.0;
  double mean_diff = 0.0;
  double ci_half_width = 0.0;  // Bonferroni-adjusted 95% family interval
};

struct GaComparisonResult {
  std::vector<GaSeriesRow> rows;
  int instances_per_family = 0;
};

/// Paired GA vs random search with shared initial pools and equal
/// per-iteration budgets.
GaComparisonResult run_ga_comparison(const ExperimentConfig& config);

// Deterministic CSV renderings (no timestamp inside).
std::string instances_csv(const std::vector<InstanceRecord>& rows);
std::string aggregates_csv(const std::vector<AggregateRow>& rows);
std::string ga_comparison_csv(const GaComparisonResult& result);

/// Recomputes aggregates for one table from per-instance rows.
std::vector<AggregateRow> aggregate_table1(const std::vector<InstanceRecord>& rows);
std::vector<AggregateRow> aggregate_table2(const std::vector<InstanceRecord>& rows);

/// Runs everything the config asks for and writes CSVs plus a JSON
/// manifest under out_dir. Output bytes depend only on the config (the
/// timestamp header line aside); wall times go to the manifest only.
void run_experiment(const ExperimentConfig& config);

}  // namespace lomax
