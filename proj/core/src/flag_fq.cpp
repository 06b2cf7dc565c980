#include "korbit/flag_fq.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace korbit {

namespace {

// every vector in the row space of `basis`, as coefficient sweeps
std::vector<std::vector<int>> row_space_vectors(const MatFq& basis) {
  const int k = basis.rows();
  const int n = basis.cols();
  const int q = basis.modulus();
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(q);
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<size_t>(total));
  std::vector<int> coef(static_cast<size_t>(k), 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (int i = 0; i < k; ++i) {
      coef[static_cast<size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
    }
    std::vector<int> v(static_cast<size_t>(n), 0);
    for (int i = 0; i < k; ++i) {
      const int c = coef[static_cast<size_t>(i)];
      if (c == 0) continue;
      for (int j = 0; j < n; ++j)
        v[static_cast<size_t>(j)] = (v[static_cast<size_t>(j)] + c * basis.at(i, j)) % q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

FlagOverFq::FlagOverFq(int n, int q, std::vector<MatFq> steps) : n_(n), q_(q) {
  if (n < 1) throw std::invalid_argument("FlagOverFq: n must be positive");
  if (!is_prime(q)) throw std::invalid_argument("FlagOverFq: modulus must be prime");
  if (static_cast<int>(steps.size()) != n - 1)
    throw std::invalid_argument("FlagOverFq: expected n-1 proper steps");
  steps_.reserve(steps.size());
  for (int level = 1; level < n; ++level) {
    MatFq& given = steps[static_cast<size_t>(level - 1)];
    if (given.cols() != n || given.modulus() != q)
      throw std::invalid_argument("FlagOverFq: step shape or modulus mismatch");
    MatFq canon = given.row_space_basis();
    if (canon.rows() != level)
      throw std::invalid_argument("FlagOverFq: step has wrong dimension");
    if (level > 1) {
      const MatFq& prev = steps_.back();
      for (int r = 0; r < prev.rows(); ++r) {
        std::vector<int> row(static_cast<size_t>(n), 0);
        for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = prev.at(r, j);
        if (!canon.row_in_row_space(row))
          throw std::invalid_argument("FlagOverFq: steps are not nested");
      }
    }
    steps_.push_back(std::move(canon));
  }
}

std::string FlagOverFq::key() const {
  std::string s;
  for (const MatFq& m : steps_) {
    s += m.key();
    s.push_back('|');
  }
  return s;
}

std::uint64_t flag_count(int n, int q) {
  std::uint64_t total = 1;
  std::uint64_t qk = static_cast<std::uint64_t>(q);
  for (int k = 2; k <= n; ++k) {
    qk *= static_cast<std::uint64_t>(q);
    total *= (qk - 1) / static_cast<std::uint64_t>(q - 1);
  }
  return total;
}

std::vector<MatFq> intermediate_subspaces(const MatFq& lower, const MatFq& upper) {
  if (lower.cols() != upper.cols() || lower.modulus() != upper.modulus())
    throw std::invalid_argument("intermediate_subspaces: shape or modulus mismatch");
  if (upper.rows() < lower.rows() + 2)
    throw std::invalid_argument("intermediate_subspaces: gap must be at least 2");
  std::map<std::string, MatFq> seen;
  for (const auto& v : row_space_vectors(upper)) {
    if (lower.rows() > 0 ? lower.row_in_row_space(v) : std::all_of(v.begin(), v.end(), [](int x) {
          return x == 0;
        }))
      continue;
    MatFq augmented(lower.rows() + 1, lower.cols(), lower.modulus());
    for (int r = 0; r < lower.rows(); ++r)
      for (int j = 0; j < lower.cols(); ++j) augmented.set(r, j, lower.at(r, j));
    for (int j = 0; j < lower.cols(); ++j) augmented.set(lower.rows(), j, v[static_cast<size_t>(j)]);
    MatFq canon = augmented.row_space_basis();
    seen.emplace(canon.key(), std::move(canon));
  }
  std::vector<MatFq> out;
  out.reserve(seen.size());
  for (auto& [k, m] : seen) out.push_back(std::move(m));
  return out;
}

std::vector<FlagOverFq> enumerate_flags(int n, int q) {
  if (n < 1 || n > 5) throw std::invalid_argument("enumerate_flags: n out of range");
  if (q != 2 && q != 3 && q != 5) throw std::invalid_argument("enumerate_flags: unsupported field");
  if (flag_count(n, q) > 1000000) throw std::invalid_argument("enumerate_flags: too many flags");

  const MatFq full = MatFq::identity(n, q);
  std::vector<std::vector<MatFq>> chains{{}};
  for (int level = 1; level < n; ++level) {
    std::vector<std::vector<MatFq>> next;
    for (const auto& chain : chains) {
      const MatFq lower = chain.empty() ? MatFq(0, n, q) : chain.back();
      for (MatFq& m : intermediate_subspaces(lower, full)) {
        std::vector<MatFq> extended = chain;
        extended.push_back(std::move(m));
        next.push_back(std::move(extended));
      }
    }
    chains = std::move(next);
  }
  std::vector<FlagOverFq> out;
  out.reserve(chains.size());
  for (auto& chain : chains) out.emplace_back(n, q, std::move(chain));
  std::sort(out.begin(), out.end(),
            [](const FlagOverFq& a, const FlagOverFq& b) { return a.key() < b.key(); });
  if (out.size() != flag_count(n, q))
    throw std::logic_error("enumerate_flags: count disagrees with closed form");
  return out;
}

FlagOverFq apply_matrix(const MatFq& g, const FlagOverFq& f) {
  const int n = f.n();
  if (g.rows() != n || g.cols() != n || g.modulus() != f.modulus())
    throw std::invalid_argument("apply_matrix: shape or modulus mismatch");
  MatFq gt(n, n, g.modulus());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gt.set(i, j, g.at(j, i));
  std::vector<MatFq> steps;
  steps.reserve(static_cast<size_t>(n - 1));
  for (int level = 1; level < n; ++level) steps.push_back(f.step(level).multiply(gt));
  return FlagOverFq(n, f.modulus(), std::move(steps));
}

}  // namespace korbit
