#ifndef KORBIT_FQ_HPP
#define KORBIT_FQ_HPP

/*
  Dense matrices over a small prime field, with the canonical reduced
  row echelon form used everywhere as the unique representation of a
  row space. Exact arithmetic; residues live in 0..q-1.
*/

#include <string>
#include <vector>

namespace korbit {

bool is_prime(int q);
int fq_inverse(int a, int q);    // a != 0 mod q
int primitive_root(int q);       // smallest generator of the unit group

class MatFq {
 public:
  MatFq(int rows, int cols, int q);
  static MatFq identity(int n, int q);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int modulus() const { return q_; }

  int at(int r, int c) const { return a_[static_cast<size_t>(r * cols_ + c)]; }
  void set(int r, int c, int value);

  MatFq multiply(const MatFq& other) const;
  std::vector<int> apply(const std::vector<int>& v) const;  // column vector image

  // canonical reduced row echelon form, zero rows dropped
  MatFq row_space_basis() const;
  int rank() const;

  // rows form a basis of {y : M y = 0}
  MatFq nullspace_basis() const;

  // true iff the row vector lies in the row space
  bool row_in_row_space(const std::vector<int>& v) const;

  std::string key() const;  // canonical byte string, one char per entry

  friend bool operator==(const MatFq& a, const MatFq& b) = default;

 private:
  void rref_in_place(std::vector<int>& pivot_cols);
  int rows_ = 0;
  int cols_ = 0;
  int q_ = 0;
  std::vector<int> a_;
};

// stack rows of two matrices with equal column counts and modulus
MatFq vstack(const MatFq& top, const MatFq& bottom);

}  // namespace korbit

#endif
