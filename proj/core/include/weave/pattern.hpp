#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "weave/error.hpp"
#include "weave/matrix.hpp"
#include "weave/shift2d.hpp"

namespace weave {

struct Cell {
  std::ptrdiff_t i = 0;  // column
  std::ptrdiff_t j = 0;  // row, increasing upward

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
};

/// Shift of finite type given by a window F and admissible patterns P on it.
/// The window is normalized so its bounding box starts at (0,0); cells are
/// sorted bottom row first, left to right, and every pattern lists one
/// symbol per cell in that order.
struct PatternShift2D {
  std::string name;
  std::vector<std::string> alphabet;
  std::vector<Cell> window;
  std::vector<std::vector<std::size_t>> patterns;

  std::size_t box_width() const;
  std::size_t box_height() const;
  bool admits(const std::vector<std::size_t>& pattern) const;
};

/// Normalizes the window (translation, cell order) and sorts/deduplicates the
/// patterns. Throws InvalidArgument on an empty window or empty pattern set.
PatternShift2D make_pattern_shift(std::string name, std::vector<std::string> alphabet, std::vector<Cell> window,
                                  std::vector<std::vector<std::size_t>> patterns);

/// Blocks of the given size in which every translate of the window that fits
/// is an admissible pattern, in reading order (top row first).
std::vector<Block> enumerate_pattern_blocks(const PatternShift2D& ps, std::size_t width, std::size_t height,
                                            const Budget& budget = {});

/// The nearest-neighbour presentation of X(A,B): window {(0,0),(1,0),(0,1)}.
PatternShift2D pattern_of_matrix_shift(const MatrixShift& x);

struct Recoding {
  MatrixShift shift;
  /// Cells covered by one recoded symbol (relative to its base cell).
  std::vector<Cell> region;
};

/// Higher block presentation as a matrix shift. When the window is contained
/// in {(0,0),(1,0),(0,1)} and holds (0,0), the symbols are the admissible
/// patterns themselves; otherwise they are the locally admissible blocks of
/// the window's bounding box. A and B express agreement on overlaps.
Recoding recode_to_matrix_shift(const PatternShift2D& ps, const Budget& budget = {}, std::size_t max_side = 8);

/// One-dimensional SFT Y (transition matrix C) with a sliding block rule of
/// window w mapping admissible w-words to symbols.
struct CellularAutomaton {
  std::string name;
  std::vector<std::string> alphabet;
  IntMatrix c;
  std::size_t window = 1;
  std::map<std::vector<std::size_t>, std::size_t> rule;
};

/// Admissible w-words of Y in lexicographic order.
std::vector<std::vector<std::size_t>> admissible_words(const CellularAutomaton& ca);

/// Throws ValidationError unless the rule is defined on every admissible word
/// (and only on those).
void require_total_rule(const CellularAutomaton& ca);

/// Space-time shift {(y_m) : y_{m+1} = phi(y_m)} recoded over w-words:
/// horizontal = overlap in w-1 symbols, vertical = the upper word starts with
/// the image of the lower one.
MatrixShift from_cellular_automaton(const CellularAutomaton& ca);

/// The same space-time shift over the original state alphabet, with window
/// {(0,0),...,(max(w,2)-1,0),(0,1)}.
PatternShift2D pattern_of_cellular_automaton(const CellularAutomaton& ca);

}  // namespace weave
