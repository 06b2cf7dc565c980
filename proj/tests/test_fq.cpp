#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "korbit/flag_fq.hpp"
#include "korbit/fq.hpp"

using namespace korbit;

namespace {

MatFq random_matrix(int rows, int cols, int q, std::mt19937& rng) {
  MatFq m(rows, cols, q);
  std::uniform_int_distribution<int> dist(0, q - 1);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, dist(rng));
  return m;
}

// order of a in the unit group of F_q, by brute multiplication
int unit_order(int a, int q) {
  int acc = a % q;
  int order = 1;
  while (acc != 1) {
    acc = (acc * a) % q;
    ++order;
  }
  return order;
}

}  // namespace

TEST_CASE("prime field scalar arithmetic") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(5));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(9));
  for (int q : {2, 3, 5})
    for (int a = 1; a < q; ++a) CHECK((a * fq_inverse(a, q)) % q == 1);
  CHECK(primitive_root(2) == 1);
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(5) == 2);
  for (int q : {3, 5}) CHECK(unit_order(primitive_root(q), q) == q - 1);
}

TEST_CASE("rref canonical form properties") {
  std::mt19937 rng(20260819);
  for (int q : {2, 3, 5}) {
    for (int trial = 0; trial < 200; ++trial) {
      const MatFq m = random_matrix(3, 4, q, rng);
      const MatFq basis = m.row_space_basis();
      // idempotent: rref of the rref is itself
      CHECK(basis.row_space_basis() == basis);
      CHECK(basis.rows() == m.rank());
      CHECK(basis.rank() == m.rank());
      // row space membership is preserved both ways
      for (int r = 0; r < m.rows(); ++r) {
        std::vector<int> row(static_cast<size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) row[static_cast<size_t>(c)] = m.at(r, c);
        CHECK(basis.row_in_row_space(row));
      }
      // row_in_row_space agrees with "stacking does not grow the rank"
      const MatFq probe = random_matrix(1, 4, q, rng);
      std::vector<int> v(static_cast<size_t>(probe.cols()));
      for (int c = 0; c < probe.cols(); ++c) v[static_cast<size_t>(c)] = probe.at(0, c);
      CHECK(m.row_in_row_space(v) == (vstack(m, probe).rank() == m.rank()));
    }
  }
}

TEST_CASE("rank-nullity and nullspace correctness") {
  std::mt19937 rng(7);
  for (int q : {2, 3, 5}) {
    for (int trial = 0; trial < 200; ++trial) {
      const MatFq m = random_matrix(3, 5, q, rng);
      const MatFq nullsp = m.nullspace_basis();
      CHECK(m.rank() + nullsp.rows() == m.cols());
      CHECK(nullsp.rank() == nullsp.rows());
      for (int r = 0; r < nullsp.rows(); ++r) {
        std::vector<int> y(static_cast<size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) y[static_cast<size_t>(c)] = nullsp.at(r, c);
        for (int value : m.apply(y)) CHECK(value == 0);
      }
    }
  }
}

TEST_CASE("matrix product against apply") {
  std::mt19937 rng(99);
  const int q = 5;
  for (int trial = 0; trial < 100; ++trial) {
    const MatFq g = random_matrix(4, 4, q, rng);
    const MatFq h = random_matrix(4, 4, q, rng);
    const MatFq gh = g.multiply(h);
    std::uniform_int_distribution<int> dist(0, q - 1);
    std::vector<int> v(4);
    for (int& x : v) x = dist(rng);
    CHECK(gh.apply(v) == g.apply(h.apply(v)));
  }
  const MatFq id = MatFq::identity(3, 3);
  CHECK(id.multiply(id) == id);
  CHECK(id.rank() == 3);
}

TEST_CASE("flag counts match enumeration") {
  const std::map<std::pair<int, int>, std::uint64_t> expected{
      {{2, 2}, 3},  {{2, 3}, 4},    {{3, 2}, 21},  {{3, 3}, 52},  {{3, 5}, 186},
      {{4, 2}, 315}, {{4, 3}, 2080}, {{4, 5}, 29016}, {{5, 2}, 9765}};
  for (const auto& [nq, count] : expected) {
    CHECK(flag_count(nq.first, nq.second) == count);
    if (count > 3000) continue;  // closed form only for the big ones
    const auto flags = enumerate_flags(nq.first, nq.second);
    CHECK(flags.size() == count);
    std::set<std::string> keys;
    for (const FlagOverFq& f : flags) keys.insert(f.key());
    CHECK(keys.size() == flags.size());
  }
}

TEST_CASE("flag validation and structure") {
  const int n = 3, q = 3;
  for (const FlagOverFq& f : enumerate_flags(n, q)) {
    for (int level = 1; level < n; ++level) {
      const MatFq& step = f.step(level);
      CHECK(step.rank() == level);
      CHECK(step == step.row_space_basis());  // stored canonically
      if (level > 1) {
        // nesting: every row of the lower step lies in the upper step
        const MatFq& lower = f.step(level - 1);
        for (int r = 0; r < lower.rows(); ++r) {
          std::vector<int> row(static_cast<size_t>(n));
          for (int c = 0; c < n; ++c) row[static_cast<size_t>(c)] = lower.at(r, c);
          CHECK(step.row_in_row_space(row));
        }
      }
    }
  }
  // a non-nested chain is rejected
  MatFq e1(1, 3, q), e2(1, 3, q);
  e1.set(0, 0, 1);
  e2.set(0, 1, 1);
  MatFq top(2, 3, q);
  top.set(0, 1, 1);
  top.set(1, 2, 1);  // span{e2, e3} does not contain e1
  CHECK_THROWS_AS(FlagOverFq(3, q, {e1, top}), std::invalid_argument);
  CHECK_NOTHROW(FlagOverFq(3, q, {e2, top}));
}

TEST_CASE("intermediate subspaces") {
  const int q = 3;
  const MatFq bottom(0, 3, q);
  const MatFq full = MatFq::identity(3, q);
  // lines in F_3^3: (27-1)/2 = 13
  CHECK(intermediate_subspaces(bottom, full).size() == 13);
  MatFq line(1, 3, q);
  line.set(0, 0, 1);
  // planes between a line and the full space: q + 1 = 4
  const auto planes = intermediate_subspaces(line, full);
  CHECK(planes.size() == 4);
  std::set<std::string> keys;
  for (const MatFq& m : planes) {
    CHECK(m.rank() == 2);
    CHECK(m == m.row_space_basis());
    std::vector<int> l{1, 0, 0};
    CHECK(m.row_in_row_space(l));
    keys.insert(m.key());
  }
  CHECK(keys.size() == planes.size());
  // gap of one dimension is not a valid "strictly between" query
  CHECK_THROWS_AS(intermediate_subspaces(line, planes.front()), std::invalid_argument);
}

TEST_CASE("matrix action on flags") {
  const int n = 3, q = 3;
  const auto flags = enumerate_flags(n, q);
  const MatFq id = MatFq::identity(n, q);
  for (const FlagOverFq& f : flags) CHECK(apply_matrix(id, f) == f);

  std::mt19937 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    MatFq g = random_matrix(n, n, q, rng);
    MatFq h = random_matrix(n, n, q, rng);
    if (g.rank() < n || h.rank() < n) continue;  // need invertible actions
    const FlagOverFq& f = flags[static_cast<size_t>(trial) % flags.size()];
    CHECK(apply_matrix(g, apply_matrix(h, f)) == apply_matrix(g.multiply(h), f));
  }
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_flags(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_flags(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_flags(0, 3), std::invalid_argument);
}
