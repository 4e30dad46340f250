#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weave/error.hpp"
#include "weave/matrix.hpp"
#include "weave/shift2d.hpp"

namespace weave {

/// Side A: vertical strips of height n (1 x n columns, compared from the top
/// symbol down) with horizontal transitions A_n. Side B: horizontal strips of
/// width n (n x 1 rows, compared from the left symbol) with vertical
/// transitions B_n.
enum class Side { A, B };

const char* to_string(Side s) noexcept;

struct TowerLevel {
  Side side = Side::A;
  std::size_t n = 1;
  std::vector<Block> strip_alphabet;
  IntMatrix matrix;
  /// Retained indices of the Kronecker parent (empty at level 1).
  std::vector<std::size_t> parent_indices;
  /// Deleted indices of the Kronecker parent (empty at level 1).
  std::vector<std::size_t> deleted_indices;

  std::size_t k() const noexcept { return strip_alphabet.size(); }
};

/// Level 1: the strip alphabet is the symbol alphabet and the matrix is A (or B).
TowerLevel first_level(const MatrixShift& x, Side side);

/// A_{n+1} as the principal submatrix of A (x) A_n: index j*k_n + h (new top
/// symbol j over strip h) is deleted iff B(top(h), j) = 0. The deletion set is
/// also computed from the column sums of B^{n-1} and the two must agree;
/// disagreement throws std::logic_error.
TowerLevel next_A(const MatrixShift& x, const TowerLevel& level, const Budget& budget = {});

/// B_{n+1} inside B (x) B_n: new left symbol j beside strip h, deleted iff
/// A(j, left(h)) = 0; the index-arithmetic route uses the row sums of A^{n-1}.
TowerLevel next_B(const MatrixShift& x, const TowerLevel& level, const Budget& budget = {});

struct TowerResult {
  std::vector<TowerLevel> levels;
  /// Per step n -> n+1: were the deleted indices exactly the trailing ones?
  std::vector<bool> tail_deletion;
  std::vector<std::string> warnings;

  std::vector<std::size_t> k_sequence() const;
};

TowerResult tower(const MatrixShift& x, Side side, std::size_t levels, const Budget& budget = {});

/// The level built directly from locally admissible strips, without Kronecker
/// products. parent_indices/deleted_indices are left empty.
TowerLevel oracle_level(const MatrixShift& x, Side side, std::size_t n, const Budget& budget = {});

}  // namespace weave
