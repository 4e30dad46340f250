#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "weave/bigint.hpp"
#include "weave/matrix.hpp"

namespace weave {

/// Dense integer matrix with arbitrary-precision entries.
class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ZMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  explicit ZMatrix(const IntMatrix& m);

  static ZMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const ZMatrix&, const ZMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

ZMatrix multiply(const ZMatrix& a, const ZMatrix& b);
ZMatrix transpose(const ZMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const ZMatrix& m);

/// I - A, or I - A^t when transposed is set.
ZMatrix identity_minus(const ZMatrix& a, bool transposed = false);

/// U * M * V = D with U, V unimodular and D diagonal with non-negative
/// entries forming a divisibility chain.
struct SmithDecomposition {
  ZMatrix u;
  ZMatrix d;
  ZMatrix v;

  std::vector<BigInt> diagonal() const;
  std::size_t rank() const;
};

/// Computes the decomposition and re-verifies every invariant (product,
/// unimodularity by exact determinant, divisibility); a failed check throws
/// std::logic_error.
SmithDecomposition smith_normal_form(const ZMatrix& m);

}  // namespace weave
