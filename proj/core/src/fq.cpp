#include "korbit/fq.hpp"

#include <stdexcept>

namespace korbit {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

int fq_inverse(int a, int q) {
  a %= q;
  if (a < 0) a += q;
  if (a == 0) throw std::invalid_argument("fq_inverse: zero has no inverse");
  for (int b = 1; b < q; ++b)
    if (a * b % q == 1) return b;
  throw std::invalid_argument("fq_inverse: modulus not prime");
}

int primitive_root(int q) {
  if (!is_prime(q)) throw std::invalid_argument("primitive_root: modulus not prime");
  for (int g = 1; g < q; ++g) {
    int x = g % q;
    int order = 1;
    while (x != 1) {
      x = x * g % q;
      ++order;
    }
    if (order == q - 1) return g;
  }
  throw std::logic_error("primitive_root: unit group not cyclic");
}

MatFq::MatFq(int rows, int cols, int q) : rows_(rows), cols_(cols), q_(q) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("MatFq: negative shape");
  if (!is_prime(q)) throw std::invalid_argument("MatFq: modulus must be prime");
  a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
}

MatFq MatFq::identity(int n, int q) {
  MatFq m(n, n, q);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void MatFq::set(int r, int c, int value) {
  value %= q_;
  if (value < 0) value += q_;
  a_[static_cast<size_t>(r * cols_ + c)] = value;
}

MatFq MatFq::multiply(const MatFq& other) const {
  if (cols_ != other.rows_ || q_ != other.q_)
    throw std::invalid_argument("MatFq::multiply: shape or modulus mismatch");
  MatFq out(rows_, other.cols_, q_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const int aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j)
        out.set(i, j, out.at(i, j) + aik * other.at(k, j));
    }
  return out;
}

std::vector<int> MatFq::apply(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("MatFq::apply: length mismatch");
  std::vector<int> out(static_cast<size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    int acc = 0;
    for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = acc % q_;
  }
  return out;
}

void MatFq::rref_in_place(std::vector<int>& pivot_cols) {
  pivot_cols.clear();
  int lead = 0;
  for (int col = 0; col < cols_ && lead < rows_; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows_; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < cols_; ++j) {
        const int t = at(lead, j);
        set(lead, j, at(pivot, j));
        set(pivot, j, t);
      }
    const int inv = fq_inverse(at(lead, col), q_);
    for (int j = 0; j < cols_; ++j) set(lead, j, at(lead, j) * inv);
    for (int r = 0; r < rows_; ++r) {
      if (r == lead) continue;
      const int f = at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j) set(r, j, at(r, j) + (q_ - f) * at(lead, j));
    }
    pivot_cols.push_back(col);
    ++lead;
  }
}

MatFq MatFq::row_space_basis() const {
  MatFq work = *this;
  std::vector<int> pivots;
  work.rref_in_place(pivots);
  MatFq out(static_cast<int>(pivots.size()), cols_, q_);
  for (int r = 0; r < out.rows_; ++r)
    for (int j = 0; j < cols_; ++j) out.set(r, j, work.at(r, j));
  return out;
}

int MatFq::rank() const {
  MatFq work = *this;
  std::vector<int> pivots;
  work.rref_in_place(pivots);
  return static_cast<int>(pivots.size());
}

MatFq MatFq::nullspace_basis() const {
  MatFq work = *this;
  std::vector<int> pivots;
  work.rref_in_place(pivots);
  std::vector<char> is_pivot(static_cast<size_t>(cols_), 0);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  MatFq out(static_cast<int>(free_cols.size()), cols_, q_);
  for (int k = 0; k < out.rows_; ++k) {
    const int f = free_cols[static_cast<size_t>(k)];
    out.set(k, f, 1);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
      out.set(k, pivots[static_cast<size_t>(r)], -work.at(r, f));
  }
  return out;
}

bool MatFq::row_in_row_space(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("MatFq::row_in_row_space: length mismatch");
  const MatFq basis = row_space_basis();
  std::vector<int> w(v);
  for (auto& x : w) {
    x %= q_;
    if (x < 0) x += q_;
  }
  // reduce against the rref rows; pivot entry of each row is the leading 1
  for (int r = 0; r < basis.rows_; ++r) {
    int lead = -1;
    for (int j = 0; j < cols_; ++j)
      if (basis.at(r, j) != 0) {
        lead = j;
        break;
      }
    const int f = w[static_cast<size_t>(lead)];
    if (f == 0) continue;
    for (int j = 0; j < cols_; ++j)
      w[static_cast<size_t>(j)] = (w[static_cast<size_t>(j)] + (q_ - f) * basis.at(r, j)) % q_;
  }
  for (int x : w)
    if (x != 0) return false;
  return true;
}

std::string MatFq::key() const {
  std::string s;
  s.reserve(a_.size());
  for (int x : a_) s.push_back(static_cast<char>('0' + x));
  return s;
}

MatFq vstack(const MatFq& top, const MatFq& bottom) {
  if (top.cols() != bottom.cols() || top.modulus() != bottom.modulus())
    throw std::invalid_argument("vstack: shape or modulus mismatch");
  MatFq out(top.rows() + bottom.rows(), top.cols(), top.modulus());
  for (int r = 0; r < top.rows(); ++r)
    for (int j = 0; j < top.cols(); ++j) out.set(r, j, top.at(r, j));
  for (int r = 0; r < bottom.rows(); ++r)
    for (int j = 0; j < top.cols(); ++j) out.set(top.rows() + r, j, bottom.at(r, j));
  return out;
}

}  // namespace korbit
