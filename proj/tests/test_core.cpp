#include <doctest.h>

#include "lop/core.hpp"
#include "lop/generators.hpp"
#include "oracle.hpp"

using lop::LopInstance;
using lop::Permutation;
using oracle::a3;
using oracle::one_based;

TEST_CASE("permutation validates bijection") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), lop::InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), lop::InvalidArgument);
  CHECK_THROWS_AS(Permutation({-1, 0}), lop::InvalidArgument);
  const Permutation p = one_based({3, 1, 2});
  CHECK(p[0] == 2);
  CHECK(p.to_one_based() == std::vector<int>{3, 1, 2});
  CHECK(lop::to_string(p) == "[3 1 2]");
}

TEST_CASE("instance rejects bad shapes and diagonals") {
  CHECK_THROWS_AS(LopInstance(Eigen::MatrixXd::Zero(2, 3)), lop::InvalidArgument);
  CHECK_THROWS_AS(LopInstance(Eigen::MatrixXd::Zero(1, 1)), lop::InvalidArgument);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
  a(1, 1) = 1e-3;
  CHECK_THROWS_AS(LopInstance{a}, lop::InvalidArgument);
  a(1, 1) = 1e-14;
  const LopInstance snapped(a, 1e-12);
  CHECK(snapped(1, 1) == 0.0);
}

TEST_CASE("evaluate on the 3x3 example") {
  CHECK(lop::evaluate(a3(), one_based({1, 2, 3})) == 7);
  CHECK(lop::evaluate(a3(), one_based({3, 2, 1})) == 14);
  CHECK(lop::evaluate(LopInstance::zero(4), one_based({2, 4, 1, 3})) == 0);
  CHECK_THROWS_AS(lop::evaluate(a3(), Permutation::identity(4)), lop::InvalidArgument);
}

TEST_CASE("adjacent swap delta") {
  CHECK(lop::adjacent_swap_delta(a3(), one_based({1, 2, 3}), 0) == 2);
  CHECK(lop::adjacent_swap_delta(a3(), one_based({1, 2, 3}), 1) == 2);
  const LopInstance sym = oracle::from_rows({{0, 2, 5}, {2, 0, -1}, {5, -1, 0}});
  for (int k = 0; k < 2; ++k) CHECK(lop::adjacent_swap_delta(sym, one_based({2, 3, 1}), k) == 0);
  CHECK_THROWS_AS(lop::adjacent_swap_delta(a3(), Permutation::identity(3), 2), lop::InvalidArgument);
  CHECK_THROWS_AS(lop::adjacent_swap_delta(a3(), Permutation::identity(3), -1), lop::InvalidArgument);
}

TEST_CASE("swap_positions and cyclic_shift") {
  CHECK(lop::swap_positions(one_based({1, 2, 3}), 0, 2) == one_based({3, 2, 1}));
  CHECK(lop::swap_positions(one_based({4, 1, 2, 3}), 1, 2) == one_based({4, 2, 1, 3}));
  CHECK_THROWS_AS(lop::swap_positions(one_based({1, 2, 3}), 1, 1), lop::InvalidArgument);
  CHECK_THROWS_AS(lop::swap_positions(one_based({1, 2, 3}), 0, 3), lop::InvalidArgument);

  CHECK(lop::cyclic_shift(one_based({1, 2, 3, 4})) == one_based({4, 1, 2, 3}));
  CHECK(lop::cyclic_shift(one_based({1, 2})) == one_based({2, 1}));
  Permutation p = one_based({3, 5, 1, 2, 4});
  const Permutation start = p;
  for (int k = 0; k < 5; ++k) p = lop::cyclic_shift(p);
  CHECK(p == start);
}

TEST_CASE("net_flow and mean_value") {
  const Eigen::VectorXd v = lop::net_flow(a3());
  CHECK(v(0) == -5);
  CHECK(v(1) == 0);
  CHECK(v(2) == 5);
  CHECK(lop::net_flow(oracle::c3()).isZero());
  CHECK(lop::mean_value(a3()) == 10.5);
  CHECK(lop::mean_value(LopInstance::zero(5)) == 0);
  CHECK(lop::mean_value(oracle::u3()) == 0);
}

TEST_CASE("relative_error") {
  CHECK(lop::relative_error(14, 14, 7) == 0.0);
  CHECK(lop::relative_error(7, 14, 7) == 1.0);
  CHECK(lop::relative_error(lop::evaluate(a3(), one_based({2, 3, 1})), 14, 7) == doctest::Approx(2.0 / 7));
  CHECK(lop::relative_error(3, 3, 3) == 0.0);
}

TEST_CASE("property: deltas and means against enumeration") {
  for (int n = 2; n <= 7; ++n) {
    for (int s = 0; s < 3; ++s) {
      const LopInstance inst = lop::gen_uniform(n, lop::RngSeed(7, {std::uint64_t(n), std::uint64_t(s)}));
      double sum = 0.0;
      long count = 0;
      oracle::for_each_permutation(n, [&](const Permutation& p) {
        const double f = lop::evaluate(inst, p);
        CHECK(oracle::close(f, oracle::objective(inst, p)));
        sum += f;
        ++count;
        for (int k = 0; k + 1 < n; ++k) {
          const double lhs = lop::evaluate(inst, lop::swap_positions(p, k, k + 1)) - f;
          CHECK(oracle::close(lhs, lop::adjacent_swap_delta(inst, p, k)));
        }
      });
      CHECK(oracle::close(sum / count, lop::mean_value(inst)));
    }
  }
}

TEST_CASE("property: constant off-diagonal offset shifts f by c n(n-1)/2") {
  lop::Rng rng(lop::RngSeed(99));
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + rng.below(8);
    const LopInstance inst = lop::gen_uniform(n, lop::RngSeed(99, {std::uint64_t(trial)}));
    const double c = rng.uniform(-5, 5);
    Eigen::MatrixXd shifted = inst.matrix().array() + c;
    shifted.diagonal().setZero();
    const Permutation p = oracle::random_permutation(n, rng);
    CHECK(oracle::close(lop::evaluate(LopInstance(shifted), p), lop::evaluate(inst, p) + c * n * (n - 1) / 2.0));
  }
}

TEST_CASE("property: relative_error stays in [0, 1] for feasible values") {
  lop::Rng rng(lop::RngSeed(5));
  for (int trial = 0; trial < 1000; ++trial) {
    const double lo = rng.uniform(-10, 10);
    const double hi = lo + rng.uniform(0, 10);
    const double f = lo + (hi - lo) * rng.uniform(0, 1);
    const double e = lop::relative_error(f, hi, lo);
    CHECK(e >= 0.0);
    CHECK(e <= 1.0);
  }
}
