#ifndef KORBIT_FLAG_FQ_HPP
#define KORBIT_FLAG_FQ_HPP

/*
  Full flags in F_q^n, stored as the chain of proper steps
  F_1 < F_2 < ... < F_{n-1}, each step the canonical rref basis of its
  row space. Two flags are equal iff their keys are equal byte-for-byte.
*/

#include <cstdint>
#include <string>
#include <vector>

#include "korbit/fq.hpp"

namespace korbit {

class FlagOverFq {
 public:
  // steps[i] spans F_{i+1}; validated for shape, rank, and nesting
  FlagOverFq(int n, int q, std::vector<MatFq> steps);

  int n() const { return n_; }
  int modulus() const { return q_; }
  // 1-based level, 1 <= level <= n-1
  const MatFq& step(int level) const { return steps_[static_cast<size_t>(level - 1)]; }

  std::string key() const;

  friend bool operator==(const FlagOverFq& a, const FlagOverFq& b) = default;

 private:
  int n_;
  int q_;
  std::vector<MatFq> steps_;
};

// number of full flags in F_q^n
std::uint64_t flag_count(int n, int q);

// all full flags, sorted by key; refuses n > 5, q outside {2,3,5},
// or more than 10^6 flags
std::vector<FlagOverFq> enumerate_flags(int n, int q);

// image flag g . F, re-canonicalized (g must be invertible)
FlagOverFq apply_matrix(const MatFq& g, const FlagOverFq& f);

// canonical bases of all subspaces M with lower < M < upper,
// dim M = dim lower + 1; upper may be the full space (pass n x n identity)
std::vector<MatFq> intermediate_subspaces(const MatFq& lower, const MatFq& upper);

}  // namespace korbit

#endif
