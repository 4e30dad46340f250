#include "weave/matrix.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <string>

#include "weave/error.hpp"

namespace weave {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, value_type fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (fill < 0) throw InvalidArgument("IntMatrix: negative fill value");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows) {
  std::vector<std::vector<value_type>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  *this = from_rows(copy);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<value_type>>& rows) {
  IntMatrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  m.data_.reserve(m.rows_ * m.cols_);
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw InvalidArgument("IntMatrix: ragged rows");
    for (value_type v : r) {
      if (v < 0) throw InvalidArgument("IntMatrix: negative entry");
      m.data_.push_back(v);
    }
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t n) { return IntMatrix(n, n, 1); }

bool IntMatrix::is_binary() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](value_type v) { return v == 0 || v == 1; });
}

void IntMatrix::set(std::size_t i, std::size_t j, value_type v) {
  if (i >= rows_ || j >= cols_) throw InvalidArgument("IntMatrix::set: index out of range");
  if (v < 0) throw InvalidArgument("IntMatrix::set: negative entry");
  data_[i * cols_ + j] = v;
}

std::vector<std::vector<IntMatrix::value_type>> IntMatrix::to_rows() const {
  std::vector<std::vector<value_type>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

IntMatrix::value_type IntMatrix::sum() const noexcept {
  return std::accumulate(data_.begin(), data_.end(), value_type{0});
}

std::vector<IntMatrix::value_type> IntMatrix::row_sums() const {
  std::vector<value_type> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j);
  return out;
}

std::vector<IntMatrix::value_type> IntMatrix::column_sums() const {
  std::vector<value_type> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[j] += (*this)(i, j);
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.set(j, i, m(i, j));
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("multiply: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, j, c(i, j) + aik * b(k, j));
    }
  return c;
}

IntMatrix power(const IntMatrix& m, unsigned exponent) {
  if (!m.is_square()) throw InvalidArgument("power: matrix is not square");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent) {
    if (exponent & 1u) result = multiply(result, base);
    exponent >>= 1;
    if (exponent) base = multiply(base, base);
  }
  return result;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t h = 0; h < b.rows(); ++h)
        for (std::size_t l = 0; l < b.cols(); ++l)
          k.set(i * b.rows() + h, j * b.cols() + l, aij * b(h, l));
    }
  return k;
}

IntMatrix principal_submatrix(const IntMatrix& m, std::span<const std::size_t> keep) {
  if (!m.is_square()) throw InvalidArgument("principal_submatrix: matrix is not square");
  for (std::size_t t = 0; t < keep.size(); ++t) {
    if (keep[t] >= m.rows() || (t && keep[t] <= keep[t - 1]))
      throw InvalidArgument("principal_submatrix: indices must be increasing and in range");
  }
  IntMatrix s(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) s.set(i, j, m(keep[i], keep[j]));
  return s;
}

bool is_irreducible(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("is_irreducible: matrix is not square");
  const std::size_t n = m.rows();
  // reach[i] = vertices reachable from i by a path of length >= 1
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue;
    for (std::size_t j = 0; j < n; ++j)
      if (m(start, j) > 0 && !seen[j]) {
        seen[j] = true;
        queue.push_back(j);
      }
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j)
        if (m(v, j) > 0 && !seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

bool is_permutation(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("is_permutation: matrix is not square");
  if (!m.is_binary()) return false;
  for (auto s : m.row_sums())
    if (s != 1) return false;
  for (auto s : m.column_sums())
    if (s != 1) return false;
  return true;
}

std::vector<std::size_t> permutation_cycle_lengths(const IntMatrix& m) {
  if (!is_permutation(m)) throw InvalidArgument("permutation_cycle_lengths: not a permutation matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) == 1) image[i] = j;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t v = i; !seen[v]; v = image[v]) {
      seen[v] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

bool has_zero_row(const IntMatrix& m) {
  for (auto s : m.row_sums())
    if (s == 0) return true;
  return false;
}

bool has_zero_column(const IntMatrix& m) {
  for (auto s : m.column_sums())
    if (s == 0) return true;
  return false;
}

}  // namespace weave
