#pragma once

// Experiment harness: for each (n, rep) a component pair is generated, then
// for every epsilon the composed instance A_P + epsilon * A_NP is solved
// exhaustively and the four constructives are scored by relative error.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lop/core.hpp"

namespace lop {

enum class Algorithm { Becker, SS, S, CM };

inline constexpr std::array<Algorithm, 4> kAlgorithms = {Algorithm::Becker, Algorithm::SS, Algorithm::S,
                                                         Algorithm::CM};

/// "BECKER", "SS", "S", "CM".
std::string_view algorithm_name(Algorithm algo);
Algorithm parse_algorithm(std::string_view name);  // case-insensitive

Permutation run_constructive(Algorithm algo, const LopInstance& inst);

/// 0 followed by 10^e for e = -2, -1.75, ..., 2.5 (20 values).
std::vector<double> default_epsilon_grid();

struct ExperimentConfig {
  std::vector<int> dims{10, 11};
  int reps = 20;
  std::vector<double> epsilons = default_epsilon_grid();
  std::uint64_t master_seed = 0;
  std::filesystem::path out_dir = ".";
  int enumeration_limit = 11;
  int parallel_workers = 1;
  /// Becker input is B - min_offdiag(B) + margin. SS, S and CM never see it.
  double becker_shift_margin = 0.0;

  /// Throws InvalidArgument, or ResourceLimit for dims above the limit.
  void validate() const;
};

struct ErrorRecord {
  int n = 0;
  int rep = 0;
  double epsilon = 0.0;
  Algorithm algorithm = Algorithm::Becker;
  double f_solution = 0.0;
  double f_max = 0.0;
  double f_min = 0.0;
  double error = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const ErrorRecord&, const ErrorRecord&) = default;
};

/// Seed of the (n, rep) component pair.
std::uint64_t cell_seed(std::uint64_t master_seed, int n, int rep);

/// Records ordered by (n, rep, epsilon index, algorithm); identical for any
/// worker count.
std::vector<ErrorRecord> run_experiment(const ExperimentConfig& config);

struct AggregateRow {
  int n = 0;
  double epsilon = 0.0;
  std::array<double, 4> mean_error{};  // kAlgorithms order
  int samples = 0;                     // repetitions per algorithm
};

/// Mean error per (n, epsilon, algorithm), ordered by n then epsilon.
std::vector<AggregateRow> aggregate(std::span<const ErrorRecord> records);

inline constexpr std::string_view kRecordsHeader = "n,rep,epsilon,algorithm,f_solution,f_max,f_min,error,seed";
inline constexpr std::string_view kAggregateHeader = "n,epsilon,becker,ss,s,cm";

void write_records_csv(std::ostream& out, std::span<const ErrorRecord> records);
std::vector<ErrorRecord> read_records_csv(std::istream& in);
void write_aggregate_csv(std::ostream& out, std::span<const AggregateRow> rows);

/// Long format, one line per (n, epsilon, algorithm), full precision.
void write_plot_data(std::ostream& out, std::span<const AggregateRow> rows);
std::vector<AggregateRow> read_plot_data(std::istream& in);
void emit_plot_data(const std::filesystem::path& path, std::span<const AggregateRow> rows);

/// Writes records.csv, aggregate.csv and plot_data.tsv under out_dir.
void write_experiment_outputs(const std::filesystem::path& out_dir, std::span<const ErrorRecord> records);

// ---- verify ---------------------------------------------------------------

struct SuiteResult {
  std::string name;
  bool passed = true;
  double max_violation = 0.0;
  std::uint64_t cases = 0;
  std::string detail;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

struct VerifyOptions {
  int max_n = 6;
  int samples = 10;
  std::uint64_t seed = 2024;
  /// Negative control: perturb the P instances handed to the P-component
  /// suite so that it must fail.
  bool corrupt_p_component = false;
};

/// Runs the cross-module property suites at small n. max_n must be in [3, 8].
VerifyReport verify(const VerifyOptions& options);
void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace lop
