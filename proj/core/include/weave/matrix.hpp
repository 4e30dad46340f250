#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace weave {

/// Dense row-major matrix of non-negative integers. Transition matrices are
/// the special case with entries in {0,1}.
class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, value_type fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<value_type>>& rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix all_ones(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_binary() const noexcept;

  value_type operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Checked write; rejects negative values.
  void set(std::size_t i, std::size_t j, value_type v);

  std::span<const value_type> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<std::vector<value_type>> to_rows() const;

  value_type sum() const noexcept;
  std::vector<value_type> row_sums() const;
  std::vector<value_type> column_sums() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix power(const IntMatrix& m, unsigned exponent);

/// Kronecker product; block (i,j) is a(i,j)*b, row (i,h) linearizes to
/// i*b.rows()+h.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Principal submatrix on the given (strictly increasing) indices.
IntMatrix principal_submatrix(const IntMatrix& m, std::span<const std::size_t> keep);

/// Every (i,j) reachable by a path of positive length in the support graph.
/// Computed from a transitive closure, never by powering.
bool is_irreducible(const IntMatrix& m);

/// Exactly one 1 per row and per column, zeros elsewhere.
bool is_permutation(const IntMatrix& m);

/// Cycle lengths of a permutation matrix in order of their smallest index.
std::vector<std::size_t> permutation_cycle_lengths(const IntMatrix& m);

bool has_zero_row(const IntMatrix& m);
bool has_zero_column(const IntMatrix& m);

}  // namespace weave
