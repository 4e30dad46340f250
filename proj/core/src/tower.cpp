#include "weave/tower.hpp"

#include <stdexcept>

namespace weave {

const char* to_string(Side s) noexcept { return s == Side::A ? "A" : "B"; }

std::vector<std::size_t> TowerResult::k_sequence() const {
  std::vector<std::size_t> ks;
  for (const auto& l : levels) ks.push_back(l.k());
  return ks;
}

TowerLevel first_level(const MatrixShift& x, Side side) {
  require_well_formed(x);
  TowerLevel lvl;
  lvl.side = side;
  lvl.n = 1;
  for (std::size_t s = 0; s < x.size(); ++s) {
    Block b(1, 1);
    b.set(0, 0, s);
    lvl.strip_alphabet.push_back(b);
  }
  lvl.matrix = side == Side::A ? x.a : x.b;
  return lvl;
}

namespace {

void require_level(const MatrixShift& x, const TowerLevel& level, Side side) {
  if (level.side != side) throw InvalidArgument("tower: level belongs to the other side");
  if (level.n == 0 || level.matrix.rows() != level.k() || level.matrix.cols() != level.k())
    throw InvalidArgument("tower: malformed level (matrix/alphabet size mismatch)");
  for (const auto& s : level.strip_alphabet) {
    const bool shape = side == Side::A ? (s.width() == 1 && s.height() == level.n)
                                       : (s.width() == level.n && s.height() == 1);
    if (!shape) throw InvalidArgument("tower: malformed level (strip shape)");
    for (std::size_t i = 0; i < s.width(); ++i)
      for (std::size_t j = 0; j < s.height(); ++j)
        if (s.at(i, j) >= x.size()) throw InvalidArgument("tower: malformed level (symbol out of range)");
  }
}

/// Partition index i of h given block lengths: sum_{l<i} len_l <= h < sum_{l<=i} len_l.
std::vector<std::size_t> partition_of(const std::vector<IntMatrix::value_type>& lengths, std::size_t k_n) {
  std::vector<std::size_t> part;
  part.reserve(k_n);
  for (std::size_t l = 0; l < lengths.size(); ++l)
    for (IntMatrix::value_type c = 0; c < lengths[l]; ++c) part.push_back(l);
  if (part.size() != k_n)
    throw std::logic_error("tower: strip count " + std::to_string(k_n) +
                           " differs from the entry sum of the matrix power (" + std::to_string(part.size()) + ")");
  return part;
}

TowerLevel extend(const MatrixShift& x, const TowerLevel& level, Side side, const Budget& budget) {
  require_well_formed(x);
  require_level(x, level, side);
  const std::size_t k = x.size();
  const std::size_t kn = level.k();
  const std::size_t dim = k * kn;
  if (dim * dim > budget.max_items)
    throw BudgetExceeded("tower: Kronecker parent of size " + std::to_string(dim) + " exceeds the budget");

  const IntMatrix& base = side == Side::A ? x.a : x.b;
  const IntMatrix& other = side == Side::A ? x.b : x.a;

  // Index arithmetic: strips with a given outer symbol occupy consecutive h.
  const auto pw = power(other, static_cast<unsigned>(level.n - 1));
  const auto part = partition_of(side == Side::A ? pw.column_sums() : pw.row_sums(), kn);

  TowerLevel next;
  next.side = side;
  next.n = level.n + 1;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t h = 0; h < kn; ++h) {
      const std::size_t m = j * kn + h;
      const auto& strip = level.strip_alphabet[h];
      bool keep_semantic;
      bool keep_formula;
      if (side == Side::A) {
        keep_semantic = other(strip.at(0, level.n - 1), j) == 1;
        keep_formula = other(part[h], j) != 0;
      } else {
        keep_semantic = other(j, strip.at(0, 0)) == 1;
        keep_formula = other(j, part[h]) != 0;
      }
      if (keep_semantic != keep_formula)
        throw std::logic_error("tower: deletion rule disagreement at Kronecker index " + std::to_string(m));
      if (!keep_semantic) {
        next.deleted_indices.push_back(m);
        continue;
      }
      next.parent_indices.push_back(m);
      Block grown = side == Side::A ? Block(1, next.n) : Block(next.n, 1);
      if (side == Side::A) {
        for (std::size_t r = 0; r < level.n; ++r) grown.set(0, r, strip.at(0, r));
        grown.set(0, level.n, j);
      } else {
        grown.set(0, 0, j);
        for (std::size_t c = 0; c < level.n; ++c) grown.set(c + 1, 0, strip.at(c, 0));
      }
      next.strip_alphabet.push_back(std::move(grown));
    }
  next.matrix = principal_submatrix(kronecker(base, level.matrix), next.parent_indices);
  return next;
}

}  // namespace

TowerLevel next_A(const MatrixShift& x, const TowerLevel& level, const Budget& budget) {
  return extend(x, level, Side::A, budget);
}

TowerLevel next_B(const MatrixShift& x, const TowerLevel& level, const Budget& budget) {
  return extend(x, level, Side::B, budget);
}

TowerResult tower(const MatrixShift& x, Side side, std::size_t levels, const Budget& budget) {
  if (levels == 0) throw InvalidArgument("tower: at least one level is required");
  TowerResult res;
  const auto coh = is_coherent(x.a, x.b);
  if (!coh.coherent())
    res.warnings.push_back("A and B are not coherent (" + coh.which + " at (" + std::to_string(coh.i) + "," +
                           std::to_string(coh.j) + ")); the construction is still carried out");
  res.levels.push_back(first_level(x, side));
  while (res.levels.size() < levels) {
    const auto& prev = res.levels.back();
    auto next = side == Side::A ? next_A(x, prev, budget) : next_B(x, prev, budget);
    const std::size_t parent = x.size() * prev.k();
    bool tail = true;
    const std::size_t first_deleted = parent - next.deleted_indices.size();
    for (std::size_t t = 0; t < next.deleted_indices.size(); ++t) tail = tail && next.deleted_indices[t] == first_deleted + t;
    res.tail_deletion.push_back(tail);
    res.levels.push_back(std::move(next));
  }
  return res;
}

TowerLevel oracle_level(const MatrixShift& x, Side side, std::size_t n, const Budget& budget) {
  if (n == 0) throw InvalidArgument("oracle_level: n must be >= 1");
  TowerLevel lvl;
  lvl.side = side;
  lvl.n = n;
  lvl.strip_alphabet = side == Side::A ? enumerate_blocks(x, 1, n, budget) : enumerate_blocks(x, n, 1, budget);
  const auto k = lvl.k();
  if (k * k > budget.max_items) throw BudgetExceeded("oracle_level: level matrix exceeds the budget");
  lvl.matrix = IntMatrix(k, k);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v) {
      const auto& su = lvl.strip_alphabet[u];
      const auto& sv = lvl.strip_alphabet[v];
      bool ok = true;
      for (std::size_t t = 0; t < n && ok; ++t)
        ok = side == Side::A ? x.a(su.at(0, t), sv.at(0, t)) == 1 : x.b(su.at(t, 0), sv.at(t, 0)) == 1;
      if (ok) lvl.matrix.set(u, v, 1);
    }
  return lvl;
}

}  // namespace weave
