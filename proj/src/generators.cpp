#include "lop/generators.hpp"

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

namespace lop {

namespace {

void require_dimension(int n) {
  if (n < 2) throw InvalidArgument("generator: dimension must be at least 2");
}

using Pair = std::pair<int, int>;

// Open (unassigned) pairs as an undirected graph on the rows.
class OpenPairs {
public:
  explicit OpenPairs(int n) : n_(n), open_(n, std::vector<char>(n, 1)), degree_(n, n - 1) {
    for (int i = 0; i < n; ++i) open_[i][i] = 0;
  }

  bool is_open(int i, int j) const { return open_[i][j] != 0; }
  int degree(int i) const { return degree_[i]; }
  bool empty() const {
    return std::all_of(degree_.begin(), degree_.end(), [](int d) { return d == 0; });
  }

  void close(int i, int j) {
    open_[i][j] = open_[j][i] = 0;
    --degree_[i];
    --degree_[j];
  }

  // Open pairs (i < j) that lie on a cycle of the open graph.
  std::vector<Pair> non_bridges() const {
    std::vector<int> disc(n_, -1), low(n_, 0);
    std::vector<std::vector<char>> bridge(n_, std::vector<char>(n_, 0));
    int clock = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
      disc[v] = low[v] = clock++;
      for (int w = 0; w < n_; ++w) {
        if (!open_[v][w]) continue;
        if (disc[w] < 0) {
          dfs(w, v);
          low[v] = std::min(low[v], low[w]);
          if (low[w] > disc[v]) bridge[v][w] = bridge[w][v] = 1;
        } else if (w != parent) {
          low[v] = std::min(low[v], disc[w]);
        }
      }
    };
    for (int v = 0; v < n_; ++v) {
      if (disc[v] < 0) dfs(v, -1);
    }
    std::vector<Pair> out;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (open_[i][j] && !bridge[i][j]) out.emplace_back(i, j);
      }
    }
    return out;
  }

private:
  int n_;
  std::vector<std::vector<char>> open_;
  std::vector<int> degree_;
};

}  // namespace

LopInstance gen_p_component(int n, const RngSeed& seed) {
  require_dimension(n);
  Rng rng(seed);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  std::vector<std::vector<char>> set(n, std::vector<char>(n, 0));

  std::vector<int> chain(n);
  for (int i = 0; i < n; ++i) chain[i] = i;
  rng.shuffle(std::span<int>(chain));

  for (int t = 0; t + 1 < n; ++t) {
    const int x = chain[t];
    const int y = chain[t + 1];
    switch (rng.below(3)) {
      case 0:
        a(x, y) = rng.uniform(-1, 1);
        a(y, x) = rng.uniform(-1, 1);
        d(x, y) = a(x, y) - a(y, x);
        break;
      case 1:
        a(x, y) = rng.uniform(-1, 1);
        d(x, y) = rng.uniform(-1, 1);
        a(y, x) = -d(x, y) + a(x, y);
        break;
      default:
        d(x, y) = rng.uniform(-1, 1);
        a(y, x) = rng.uniform(-1, 1);
        a(x, y) = d(x, y) + a(y, x);
        break;
    }
    d(y, x) = -d(x, y);
    set[x][y] = set[y][x] = 1;
  }

  // Additivity along the chain: a potential w with d_ij = w_i - w_j.
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  for (int t = 0; t + 1 < n; ++t) w(chain[t + 1]) = w(chain[t]) - d(chain[t], chain[t + 1]);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && !set[i][j]) d(i, j) = w(i) - w(j);
    }
  }

  std::vector<Pair> open;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!set[i][j]) open.emplace_back(i, j);
    }
  }
  rng.shuffle(std::span<Pair>(open));
  for (auto [i, j] : open) {
    if (rng.coin()) std::swap(i, j);
    a(i, j) = rng.uniform(-1, 1);
    a(j, i) = d(j, i) + a(i, j);
  }

  LopInstance inst(std::move(a));
  if (const auto check = check_p_component(inst); !check) {
    throw GeneratorInvariant("gen_p_component: additivity violated by " + std::to_string(check.max_violation));
  }
  return inst;
}

LopInstance gen_np_component(int n, const RngSeed& seed) {
  require_dimension(n);
  Rng rng(seed);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  OpenPairs open(n);

  // Closes every row that has exactly one open entry, lowest row first,
  // rescanning after each closure.
  auto close_forced_rows = [&] {
    for (int r = 0; r < n;) {
      if (open.degree(r) != 1) {
        ++r;
        continue;
      }
      int k = 0;
      while (!open.is_open(r, k)) ++k;
      double s = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != k) s += d(r, j);
      }
      d(r, k) = -s;
      d(k, r) = -d(r, k);
      if (rng.coin()) {
        a(k, r) = rng.uniform(-1, 1);
        a(r, k) = d(r, k) + a(k, r);
      } else {
        a(r, k) = rng.uniform(-1, 1);
        a(k, r) = d(k, r) + a(r, k);
      }
      open.close(r, k);
      r = 0;
    }
  };

  close_forced_rows();
  while (!open.empty()) {
    const std::vector<Pair> candidates = open.non_bridges();
    if (candidates.empty()) throw GeneratorInvariant("gen_np_component: open graph has no cycle");
    auto [i, j] = candidates[static_cast<std::size_t>(rng.below(static_cast<int>(candidates.size())))];
    if (rng.coin()) std::swap(i, j);
    if (rng.coin()) {
      a(i, j) = rng.uniform(-1, 1);
      a(j, i) = rng.uniform(-1, 1);
      d(i, j) = a(i, j) - a(j, i);
    } else {
      d(i, j) = rng.uniform(-1, 1);
      a(i, j) = rng.uniform(-1, 1);
      a(j, i) = a(i, j) - d(i, j);
    }
    d(j, i) = -d(i, j);
    open.close(i, j);
    close_forced_rows();
  }

  LopInstance inst(std::move(a));
  if (const auto check = check_np_component(inst); !check) {
    throw GeneratorInvariant("gen_np_component: skew row sum " + std::to_string(check.max_violation));
  }
  return inst;
}

LopInstance gen_uniform(int n, const RngSeed& seed) {
  require_dimension(n);
  Rng rng(seed);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) a(i, j) = rng.uniform(-1, 1);
    }
  }
  return LopInstance(std::move(a));
}

ComponentPair gen_component_pair(int n, std::uint64_t cell_seed) {
  return ComponentPair(gen_p_component(n, RngSeed(cell_seed, {0})), gen_np_component(n, RngSeed(cell_seed, {1})));
}

LopInstance compose(const LopInstance& p_part, const LopInstance& np_part, double epsilon) {
  if (p_part.n() != np_part.n()) throw InvalidArgument("compose: dimension mismatch");
  if (!(epsilon >= 0.0)) throw InvalidArgument("compose: epsilon must be nonnegative");
  return LopInstance(p_part.matrix() + epsilon * np_part.matrix());
}

LopInstance compose(const ComponentPair& pair, double epsilon) {
  return compose(pair.p_part(), pair.np_part(), epsilon);
}

InstanceKind parse_instance_kind(const std::string& name) {
  if (name == "p") return InstanceKind::P;
  if (name == "np") return InstanceKind::NP;
  if (name == "uniform") return InstanceKind::Uniform;
  throw InvalidArgument("unknown instance type '" + name + "' (expected p, np or uniform)");
}

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::P: return "p";
    case InstanceKind::NP: return "np";
    case InstanceKind::Uniform: return "uniform";
  }
  return "?";
}

LopInstance generate(InstanceKind kind, int n, const RngSeed& seed) {
  switch (kind) {
    case InstanceKind::P: return gen_p_component(n, seed);
    case InstanceKind::NP: return gen_np_component(n, seed);
    case InstanceKind::Uniform: return gen_uniform(n, seed);
  }
  throw InvalidArgument("unknown instance kind");
}

}  // namespace lop
