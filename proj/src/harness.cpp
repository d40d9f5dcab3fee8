#include "lop/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "lop/constructives.hpp"
#include "lop/generators.hpp"
#include "lop/io.hpp"
#include "lop/solvers.hpp"

namespace lop {

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::Becker: return "BECKER";
    case Algorithm::SS: return "SS";
    case Algorithm::S: return "S";
    case Algorithm::CM: return "CM";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Algorithm a : kAlgorithms) {
    if (algorithm_name(a) == upper) return a;
  }
  throw InvalidArgument("unknown algorithm '" + std::string(name) + "' (expected becker, ss, s or cm)");
}

Permutation run_constructive(Algorithm algo, const LopInstance& inst) {
  switch (algo) {
    case Algorithm::Becker: return becker(inst);
    case Algorithm::SS: return construct_ss(inst);
    case Algorithm::S: return construct_s(inst);
    case Algorithm::CM: return construct_cm(inst);
  }
  throw InvalidArgument("unknown algorithm");
}

std::vector<double> default_epsilon_grid() {
  std::vector<double> grid{0.0};
  for (int k = -8; k <= 10; ++k) grid.push_back(std::pow(10.0, k / 4.0));
  return grid;
}

void ExperimentConfig::validate() const {
  if (dims.empty()) throw InvalidArgument("experiment: no dimensions");
  if (reps < 1) throw InvalidArgument("experiment: reps must be positive");
  if (epsilons.empty()) throw InvalidArgument("experiment: empty epsilon grid");
  if (parallel_workers < 1) throw InvalidArgument("experiment: workers must be positive");
  for (std::size_t k = 0; k < epsilons.size(); ++k) {
    if (!(epsilons[k] >= 0.0) || !std::isfinite(epsilons[k])) {
      throw InvalidArgument("experiment: epsilons must be finite and nonnegative");
    }
    if (k > 0 && !(epsilons[k] > epsilons[k - 1])) {
      throw InvalidArgument("experiment: epsilons must be strictly ascending");
    }
  }
  for (int n : dims) {
    if (n < 2) throw InvalidArgument("experiment: dimensions must be at least 2");
    if (n > enumeration_limit) {
      throw ResourceLimit("experiment: n = " + std::to_string(n) + " exceeds enumeration limit " +
                          std::to_string(enumeration_limit));
    }
  }
}

std::uint64_t cell_seed(std::uint64_t master_seed, int n, int rep) {
  return RngSeed(master_seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(rep)}).derive();
}

namespace {

LopInstance becker_input(const LopInstance& composed, double margin) {
  LopInstance shifted = shift_to_nonnegative(composed);
  if (margin == 0.0) return shifted;
  Eigen::MatrixXd a = shifted.matrix().array() + margin;
  a.diagonal().setZero();
  return LopInstance(std::move(a));
}

struct Task {
  int n;
  int rep;
  std::size_t eps_index;
};

std::array<ErrorRecord, 4> run_cell(const ExperimentConfig& config, const Task& task) {
  const std::uint64_t seed = cell_seed(config.master_seed, task.n, task.rep);
  const ComponentPair pair = gen_component_pair(task.n, seed);
  const double eps = config.epsilons[task.eps_index];
  const LopInstance composed = compose(pair, eps);
  ExhaustiveOptions opts;
  opts.enumeration_limit = config.enumeration_limit;
  const ExactResult exact = solve_exhaustive(composed, opts);

  std::array<ErrorRecord, 4> out;
  for (std::size_t k = 0; k < kAlgorithms.size(); ++k) {
    const Algorithm algo = kAlgorithms[k];
    const Permutation perm = algo == Algorithm::Becker
                                 ? becker(becker_input(composed, config.becker_shift_margin))
                                 : run_constructive(algo, composed);
    const double f = evaluate(composed, perm);
    out[k] = ErrorRecord{task.n, task.rep, eps, algo, f, exact.f_max, exact.f_min,
                         relative_error(f, exact.f_max, exact.f_min), seed};
  }
  return out;
}

}  // namespace

std::vector<ErrorRecord> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<Task> tasks;
  for (int n : config.dims) {
    for (int rep = 0; rep < config.reps; ++rep) {
      for (std::size_t e = 0; e < config.epsilons.size(); ++e) tasks.push_back({n, rep, e});
    }
  }

  std::vector<std::array<ErrorRecord, 4>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) results[t] = run_cell(config, tasks[t]);
  };

  const int workers = std::min<int>(config.parallel_workers, static_cast<int>(tasks.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          worker();
        } catch (...) {
          errors[w] = std::current_exception();
          next = tasks.size();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<ErrorRecord> records;
  records.reserve(tasks.size() * kAlgorithms.size());
  for (const auto& cell : results) records.insert(records.end(), cell.begin(), cell.end());
  return records;
}

std::vector<AggregateRow> aggregate(std::span<const ErrorRecord> records) {
  if (records.empty()) throw InvalidArgument("aggregate: no records");
  struct Acc {
    std::array<double, 4> sum{};
    std::array<int, 4> count{};
  };
  std::map<std::pair<int, double>, Acc> cells;
  for (const auto& r : records) {
    Acc& acc = cells[{r.n, r.epsilon}];
    const auto k = static_cast<std::size_t>(r.algorithm);
    acc.sum[k] += r.error;
    ++acc.count[k];
  }
  std::vector<AggregateRow> rows;
  rows.reserve(cells.size());
  for (const auto& [key, acc] : cells) {
    AggregateRow row;
    row.n = key.first;
    row.epsilon = key.second;
    for (std::size_t k = 0; k < 4; ++k) {
      row.mean_error[k] = acc.count[k] > 0 ? acc.sum[k] / acc.count[k] : std::nan("");
    }
    row.samples = *std::max_element(acc.count.begin(), acc.count.end());
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  return fields;
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const ErrorRecord> records) {
  out << kRecordsHeader << '\n';
  for (const auto& r : records) {
    out << r.n << ',' << r.rep << ',' << format_real(r.epsilon) << ',' << algorithm_name(r.algorithm) << ','
        << format_real(r.f_solution) << ',' << format_real(r.f_max) << ',' << format_real(r.f_min) << ','
        << format_real(r.error) << ',' << r.seed << '\n';
  }
}

std::vector<ErrorRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kRecordsHeader) throw InvalidArgument("records csv: bad header");
  std::vector<ErrorRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_fields(line, ',');
    if (f.size() != 9) throw InvalidArgument("records csv: expected 9 fields in '" + line + "'");
    records.push_back(ErrorRecord{std::stoi(f[0]), std::stoi(f[1]), std::stod(f[2]), parse_algorithm(f[3]),
                                  std::stod(f[4]), std::stod(f[5]), std::stod(f[6]), std::stod(f[7]),
                                  std::stoull(f[8])});
  }
  return records;
}

void write_aggregate_csv(std::ostream& out, std::span<const AggregateRow> rows) {
  out << kAggregateHeader << '\n';
  for (const auto& row : rows) {
    out << row.n << ',' << fixed3(row.epsilon);
    for (double e : row.mean_error) out << ',' << fixed3(e);
    out << '\n';
  }
}

void write_plot_data(std::ostream& out, std::span<const AggregateRow> rows) {
  out << "# mean relative error per (n, epsilon, algorithm)\n";
  out << "# algorithms: BECKER,SS,S,CM\n";
  out << "# epsilon = 0 is written as exact 0; use a symlog x axis (linear near 0, log above 0.01)\n";
  out << "n\tepsilon\talgorithm\tmean_error\n";
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < kAlgorithms.size(); ++k) {
      out << row.n << '\t' << format_real(row.epsilon) << '\t' << algorithm_name(kAlgorithms[k]) << '\t'
          << format_real(row.mean_error[k]) << '\n';
    }
  }
}

std::vector<AggregateRow> read_plot_data(std::istream& in) {
  std::map<std::pair<int, double>, AggregateRow> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto f = split_fields(line, '\t');
    if (f.size() != 4) throw InvalidArgument("plot data: expected 4 fields in '" + line + "'");
    const int n = std::stoi(f[0]);
    const double eps = std::stod(f[1]);
    AggregateRow& row = rows[{n, eps}];
    row.n = n;
    row.epsilon = eps;
    row.mean_error[static_cast<std::size_t>(parse_algorithm(f[2]))] = std::stod(f[3]);
  }
  std::vector<AggregateRow> out;
  for (auto& [key, row] : rows) out.push_back(row);
  return out;
}

void emit_plot_data(const std::filesystem::path& path, std::span<const AggregateRow> rows) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_plot_data(out, rows);
  if (!out) throw IoError("write failed for " + path.string());
}

void write_experiment_outputs(const std::filesystem::path& out_dir, std::span<const ErrorRecord> records) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  {
    std::ofstream out(out_dir / "records.csv");
    if (!out) throw IoError("cannot write " + (out_dir / "records.csv").string());
    write_records_csv(out, records);
  }
  const auto rows = aggregate(records);
  {
    std::ofstream out(out_dir / "aggregate.csv");
    if (!out) throw IoError("cannot write " + (out_dir / "aggregate.csv").string());
    write_aggregate_csv(out, rows);
  }
  emit_plot_data(out_dir / "plot_data.tsv", rows);
}

}  // namespace lop
