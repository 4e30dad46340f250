#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weave/bigint.hpp"
#include "weave/error.hpp"
#include "weave/matrix.hpp"
#include "weave/textile.hpp"

namespace weave {

/// Two-dimensional matrix shift X(A,B) on the alphabet {0..k-1}.
/// Horizontal rule A(x(i,j), x(i+1,j)) = 1, vertical rule B(x(i,j), x(i,j+1)) = 1;
/// the second coordinate increases upward.
struct MatrixShift {
  std::string name;
  std::vector<std::string> alphabet;
  IntMatrix a;
  IntMatrix b;

  std::size_t size() const noexcept { return alphabet.size(); }
};

/// Checks shape invariants (square 0/1 matrices of alphabet size, unique
/// symbols); throws InvalidArgument.
void require_well_formed(const MatrixShift& x);

/// Symbol array indexed (column i, row j); row 0 is the bottom row.
class Block {
 public:
  Block() = default;
  Block(std::size_t width, std::size_t height) : width_(width), height_(height), cells_(width * height, 0) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t at(std::size_t i, std::size_t j) const { return cells_[j * width_ + i]; }
  void set(std::size_t i, std::size_t j, std::size_t s) { cells_[j * width_ + i] = s; }

  /// Sub-block with lower-left corner (i0,j0).
  Block sub(std::size_t i0, std::size_t j0, std::size_t w, std::size_t h) const;
  Block lower() const { return sub(0, 0, width_, height_ - 1); }
  Block upper() const { return sub(0, 1, width_, height_ - 1); }
  Block left() const { return sub(0, 0, width_ - 1, height_); }
  Block right() const { return sub(1, 0, width_ - 1, height_); }

  /// Reading order: top row first, each row left to right.
  std::vector<std::size_t> reading_order() const;

  friend bool operator==(const Block&, const Block&) = default;
  friend bool operator<(const Block& a, const Block& b) { return a.reading_order() < b.reading_order(); }

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::size_t> cells_;
};

/// Rows listed top to bottom separated by '/'; symbols within a row are
/// concatenated when every symbol name is one character, otherwise joined by ','.
std::string block_name(const MatrixShift& x, const Block& b);

bool locally_admissible(const MatrixShift& x, const Block& b);

enum class CoherenceStatus { coherent, not_coherent, zero_line };

struct CoherenceResult {
  CoherenceStatus status = CoherenceStatus::coherent;
  /// First violating entry (row-major) when not coherent.
  std::size_t i = 0, j = 0;
  /// "AB/BA" or "AB^t/B^tA" for a positivity mismatch; "A row", "B column",
  /// ... for a zero line.
  std::string which;

  bool coherent() const noexcept { return status == CoherenceStatus::coherent; }
};

/// (AB)(i,j)>0 iff (BA)(i,j)>0, and (AB^t)(i,j)>0 iff (B^tA)(i,j)>0.
CoherenceResult is_coherent(const IntMatrix& a, const IntMatrix& b);

/// All locally admissible width x height blocks, ordered lexicographically by
/// reading order.
std::vector<Block> enumerate_blocks(const MatrixShift& x, std::size_t width, std::size_t height,
                                    const Budget& budget = {});

/// The textile T(m,n) = (G(m,n), G(m-1,n), p, q): edges B(m,n), vertices
/// B(m,n-1), s/r the lower/upper sub-blocks, p/q the left/right sub-blocks.
TextileSystem textile_of(const MatrixShift& x, std::size_t m, std::size_t n, const Budget& budget = {});

/// T-bar(m,n) built directly: edges B(m,n), vertices B(m-1,n), source/range
/// the left/right sub-blocks, morphisms the lower/upper sub-blocks.
TextileSystem dual_textile_of(const MatrixShift& x, std::size_t m, std::size_t n, const Budget& budget = {});

/// The matrix shift woven by a textile: alphabet G^1, A(e,f) = [q(e) = p(f)],
/// B(e,f) = [r(e) = s(f)].
MatrixShift shift_of_textile(const TextileSystem& t);

/// Lifting report of T(2,2) computed by counting corner completions of 2x2
/// blocks directly on symbols.
LiftReport corner_fibration_report(const MatrixShift& x);

struct Rank2Check {
  bool commute = false;
  bool unique_factorization = false;
  /// First L-shape with a completion count other than one.
  std::optional<std::string> witness;
};

Rank2Check rank2_check(const MatrixShift& x);

enum class TileMode { count, witness, all };

struct TilingResult {
  BigInt count;
  /// One block in witness mode (if any), every block in all mode.
  std::vector<Block> blocks;
};

/// Backtracking fill of a W x H rectangle, bottom row first.
TilingResult tile_rectangle(const MatrixShift& x, std::size_t width, std::size_t height, TileMode mode,
                            const Budget& budget = {});

/// |B(width, height)| by a column-strip transfer count; no block is stored.
BigInt count_blocks(const MatrixShift& x, std::size_t width, std::size_t height, const Budget& budget = {});

struct EntropyRow {
  std::size_t n = 0;
  BigInt count;
  double rate = 0.0;  // log2(count) / n^2
};

std::vector<EntropyRow> entropy_table(const MatrixShift& x, std::size_t max_n, const Budget& budget = {});

}  // namespace weave
