#include "weave/shift2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace weave {

void require_well_formed(const MatrixShift& x) {
  const auto k = x.alphabet.size();
  if (k == 0) throw InvalidArgument("shift " + x.name + ": empty alphabet");
  std::set<std::string> names(x.alphabet.begin(), x.alphabet.end());
  if (names.size() != k) throw InvalidArgument("shift " + x.name + ": duplicate alphabet symbol");
  for (const auto* m : {&x.a, &x.b}) {
    const char* label = m == &x.a ? "A" : "B";
    if (m->rows() != k || m->cols() != k)
      throw InvalidArgument("shift " + x.name + ": matrix " + label + " must be " + std::to_string(k) + "x" +
                            std::to_string(k));
    if (!m->is_binary()) throw InvalidArgument("shift " + x.name + ": matrix " + label + " must be 0/1");
  }
}

Block Block::sub(std::size_t i0, std::size_t j0, std::size_t w, std::size_t h) const {
  if (i0 + w > width_ || j0 + h > height_) throw InvalidArgument("Block::sub: out of range");
  Block s(w, h);
  for (std::size_t j = 0; j < h; ++j)
    for (std::size_t i = 0; i < w; ++i) s.set(i, j, at(i0 + i, j0 + j));
  return s;
}

std::vector<std::size_t> Block::reading_order() const {
  std::vector<std::size_t> out;
  out.reserve(cells_.size());
  for (std::size_t j = height_; j-- > 0;)
    for (std::size_t i = 0; i < width_; ++i) out.push_back(at(i, j));
  return out;
}

std::string block_name(const MatrixShift& x, const Block& b) {
  const bool compact = std::all_of(x.alphabet.begin(), x.alphabet.end(),
                                   [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t j = b.height(); j-- > 0;) {
    if (j + 1 != b.height()) out += '/';
    for (std::size_t i = 0; i < b.width(); ++i) {
      if (i && !compact) out += ',';
      out += x.alphabet.at(b.at(i, j));
    }
  }
  return out;
}

bool locally_admissible(const MatrixShift& x, const Block& b) {
  for (std::size_t j = 0; j < b.height(); ++j)
    for (std::size_t i = 0; i < b.width(); ++i) {
      if (i + 1 < b.width() && x.a(b.at(i, j), b.at(i + 1, j)) == 0) return false;
      if (j + 1 < b.height() && x.b(b.at(i, j), b.at(i, j + 1)) == 0) return false;
    }
  return true;
}

CoherenceResult is_coherent(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw InvalidArgument("is_coherent: A and B must be square of equal size");
  CoherenceResult res;
  const std::pair<const IntMatrix*, const char*> lines[] = {{&a, "A"}, {&b, "B"}};
  for (auto [m, label] : lines) {
    const auto rows = m->row_sums();
    const auto cols = m->column_sums();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] == 0) return {CoherenceStatus::zero_line, i, 0, std::string(label) + " row"};
      if (cols[i] == 0) return {CoherenceStatus::zero_line, 0, i, std::string(label) + " column"};
    }
  }
  const auto bt = transpose(b);
  const auto ab = multiply(a, b), ba = multiply(b, a);
  const auto abt = multiply(a, bt), bta = multiply(bt, a);
  const std::size_t k = a.rows();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((ab(i, j) > 0) != (ba(i, j) > 0)) return {CoherenceStatus::not_coherent, i, j, "AB/BA"};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((abt(i, j) > 0) != (bta(i, j) > 0)) return {CoherenceStatus::not_coherent, i, j, "AB^t/B^tA"};
  return res;
}

std::vector<Block> enumerate_blocks(const MatrixShift& x, std::size_t width, std::size_t height,
                                    const Budget& budget) {
  require_well_formed(x);
  if (width == 0 || height == 0) throw InvalidArgument("enumerate_blocks: width and height must be >= 1");
  if (width * height > budget.max_items)
    throw BudgetExceeded("enumerate_blocks: " + std::to_string(width) + "x" + std::to_string(height) +
                         " exceeds the budget");
  const std::size_t k = x.size();
  const std::size_t cells = width * height;
  // Cell t in reading order sits at column t % width, row height-1 - t / width.
  std::vector<Block> out;
  Block cur(width, height);
  std::vector<std::size_t> next(cells, 0);
  std::size_t t = 0;
  while (true) {
    const std::size_t i = t % width, j = height - 1 - t / width;
    bool placed = false;
    while (next[t] < k) {
      const std::size_t s = next[t]++;
      if (i > 0 && x.a(cur.at(i - 1, j), s) == 0) continue;
      if (j + 1 < height && x.b(s, cur.at(i, j + 1)) == 0) continue;
      cur.set(i, j, s);
      placed = true;
      break;
    }
    if (placed) {
      if (t + 1 == cells) {
        out.push_back(cur);
        if (out.size() > budget.max_items)
          throw BudgetExceeded("enumerate_blocks: more than " + std::to_string(budget.max_items) + " blocks");
      } else {
        next[++t] = 0;
      }
    } else {
      if (t == 0) break;
      --t;
    }
  }
  return out;
}

namespace {

class BlockIndex {
 public:
  BlockIndex(const MatrixShift& x, std::size_t w, std::size_t h, const Budget& budget)
      : blocks_(enumerate_blocks(x, w, h, budget)) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) index_.emplace(blocks_[i].reading_order(), i);
  }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t operator[](const Block& b) const { return index_.at(b.reading_order()); }

 private:
  std::vector<Block> blocks_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
};

std::string dims(std::size_t m, std::size_t n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

void require_tower_dims(std::size_t m, std::size_t n, const char* who) {
  if (m < 2 || n < 2) throw InvalidArgument(std::string(who) + ": m and n must be >= 2");
}

}  // namespace

TextileSystem textile_of(const MatrixShift& x, std::size_t m, std::size_t n, const Budget& budget) {
  require_tower_dims(m, n, "textile_of");
  const BlockIndex edges(x, m, n, budget), verts(x, m, n - 1, budget);
  const BlockIndex h_edges(x, m - 1, n, budget), h_verts(x, m - 1, n - 1, budget);
  if (edges.blocks().empty()) throw InvalidArgument("textile_of: no admissible " + dims(m, n) + " blocks");

  auto g = std::make_shared<DirectedGraph>(x.name + ".G" + dims(m, n));
  for (const auto& v : verts.blocks()) g->add_vertex(block_name(x, v));
  for (const auto& e : edges.blocks()) g->add_edge(block_name(x, e), verts[e.lower()], verts[e.upper()]);

  auto h = std::make_shared<DirectedGraph>(x.name + ".G" + dims(m - 1, n));
  for (const auto& v : h_verts.blocks()) h->add_vertex(block_name(x, v));
  for (const auto& e : h_edges.blocks()) h->add_edge(block_name(x, e), h_verts[e.lower()], h_verts[e.upper()]);

  TextileSystem t;
  t.name = x.name + ".T" + dims(m, n);
  t.g = g;
  t.h = h;
  t.p = GraphMorphism{"p", g, h, {}, {}};
  t.q = GraphMorphism{"q", g, h, {}, {}};
  for (const auto& v : verts.blocks()) {
    t.p.vertex_map.push_back(h_verts[v.left()]);
    t.q.vertex_map.push_back(h_verts[v.right()]);
  }
  for (const auto& e : edges.blocks()) {
    t.p.edge_map.push_back(h_edges[e.left()]);
    t.q.edge_map.push_back(h_edges[e.right()]);
  }
  return t;
}

TextileSystem dual_textile_of(const MatrixShift& x, std::size_t m, std::size_t n, const Budget& budget) {
  require_tower_dims(m, n, "dual_textile_of");
  const BlockIndex edges(x, m, n, budget), verts(x, m - 1, n, budget);
  const BlockIndex h_edges(x, m, n - 1, budget), h_verts(x, m - 1, n - 1, budget);
  if (edges.blocks().empty()) throw InvalidArgument("dual_textile_of: no admissible " + dims(m, n) + " blocks");

  auto g = std::make_shared<DirectedGraph>(x.name + ".Gbar" + dims(m, n));
  for (const auto& v : verts.blocks()) g->add_vertex(block_name(x, v));
  for (const auto& e : edges.blocks()) g->add_edge(block_name(x, e), verts[e.left()], verts[e.right()]);

  auto h = std::make_shared<DirectedGraph>(x.name + ".Gbar" + dims(m, n - 1));
  for (const auto& v : h_verts.blocks()) h->add_vertex(block_name(x, v));
  for (const auto& e : h_edges.blocks()) h->add_edge(block_name(x, e), h_verts[e.left()], h_verts[e.right()]);

  TextileSystem t;
  t.name = x.name + ".Tbar" + dims(m, n);
  t.g = g;
  t.h = h;
  t.p = GraphMorphism{"s", g, h, {}, {}};
  t.q = GraphMorphism{"r", g, h, {}, {}};
  for (const auto& v : verts.blocks()) {
    t.p.vertex_map.push_back(h_verts[v.lower()]);
    t.q.vertex_map.push_back(h_verts[v.upper()]);
  }
  for (const auto& e : edges.blocks()) {
    t.p.edge_map.push_back(h_edges[e.lower()]);
    t.q.edge_map.push_back(h_edges[e.upper()]);
  }
  return t;
}

MatrixShift shift_of_textile(const TextileSystem& t) {
  MatrixShift x;
  x.name = t.name;
  const auto& g = *t.g;
  const std::size_t k = g.edge_count();
  for (const auto& e : g.edges()) x.alphabet.push_back(e.name);
  x.a = IntMatrix(k, k);
  x.b = IntMatrix(k, k);
  for (std::size_t e = 0; e < k; ++e)
    for (std::size_t f = 0; f < k; ++f) {
      if (t.q.edge_map[e] == t.p.edge_map[f]) x.a.set(e, f, 1);
      if (g.edge(e).range == g.edge(f).source) x.b.set(e, f, 1);
    }
  return x;
}

LiftReport corner_fibration_report(const MatrixShift& x) {
  require_well_formed(x);
  const std::size_t k = x.size();
  const auto& A = x.a;
  const auto& B = x.b;
  auto row = [&](std::size_t l, std::size_t r) {
    Block b(2, 1);
    b.set(0, 0, l);
    b.set(1, 0, r);
    return block_name(x, b);
  };
  auto column = [&](std::size_t top, std::size_t bottom) {
    Block b(1, 2);
    b.set(0, 1, top);
    b.set(0, 0, bottom);
    return block_name(x, b);
  };
  bool any_block = false;
  for (std::size_t c = 0; c < k && !any_block; ++c)
    for (std::size_t d = 0; d < k && !any_block; ++d)
      for (std::size_t a = 0; a < k && !any_block; ++a)
        for (std::size_t b = 0; b < k && !any_block; ++b)
          any_block = A(a, b) && A(c, d) && B(c, a) && B(d, b);
  if (!any_block) throw InvalidArgument("corner_fibration_report: no admissible 2x2 blocks");

  // Block layout:   a b
  //                 c d
  LiftReport rep;
  auto record = [](LiftCheck& chk, LiftMode mode, std::string vertex, std::string edge, std::size_t count) {
    if (count == 1) return;
    auto& exists = mode == LiftMode::source ? chk.s_exists : chk.r_exists;
    auto& unique = mode == LiftMode::source ? chk.s_unique : chk.r_unique;
    if (count == 0) exists = false;
    unique = false;
    chk.witnesses.push_back(LiftWitness{mode, std::move(vertex), std::move(edge), count});
  };
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v) {
      if (!A(u, v)) continue;  // vertex: admissible row (u v)
      for (std::size_t w = 0; w < k; ++w) {
        // p, s: bottom row (c d) = (u v), left column (a over c) = (w over u); free b.
        if (B(u, w)) {
          std::size_t n = 0;
          for (std::size_t b = 0; b < k; ++b) n += A(w, b) && B(v, b);
          record(rep.p, LiftMode::source, row(u, v), column(w, u), n);
        }
        // p, r: top row (a b) = (u v), left column (a over c) = (u over w); free d.
        if (B(w, u)) {
          std::size_t n = 0;
          for (std::size_t d = 0; d < k; ++d) n += A(w, d) && B(d, v);
          record(rep.p, LiftMode::range, row(u, v), column(u, w), n);
        }
        // q, s: bottom row (c d) = (u v), right column (b over d) = (w over v); free a.
        if (B(v, w)) {
          std::size_t n = 0;
          for (std::size_t a = 0; a < k; ++a) n += B(u, a) && A(a, w);
          record(rep.q, LiftMode::source, row(u, v), column(w, v), n);
        }
        // q, r: top row (a b) = (u v), right column (b over d) = (v over w); free c.
        if (B(w, v)) {
          std::size_t n = 0;
          for (std::size_t c = 0; c < k; ++c) n += A(c, w) && B(c, u);
          record(rep.q, LiftMode::range, row(u, v), column(v, w), n);
        }
      }
    }
  sort_witnesses(rep.p.witnesses);
  sort_witnesses(rep.q.witnesses);
  return rep;
}

Rank2Check rank2_check(const MatrixShift& x) {
  require_well_formed(x);
  const std::size_t k = x.size();
  const auto& A = x.a;
  const auto& B = x.b;
  Rank2Check out;
  out.commute = multiply(A, B) == multiply(B, A);
  out.unique_factorization = true;
  const auto& S = x.alphabet;
  // right-then-up: c -A-> d -B-> b, complete by c -B-> a -A-> b
  for (std::size_t c = 0; c < k && out.unique_factorization; ++c)
    for (std::size_t d = 0; d < k && out.unique_factorization; ++d)
      for (std::size_t b = 0; b < k && out.unique_factorization; ++b) {
        if (!A(c, d) || !B(d, b)) continue;
        std::size_t n = 0;
        for (std::size_t a = 0; a < k; ++a) n += B(c, a) && A(a, b);
        if (n != 1) {
          out.unique_factorization = false;
          out.witness = "right-then-up c=" + S[c] + " d=" + S[d] + " b=" + S[b] + " has " + std::to_string(n) +
                        " completions";
        }
      }
  // up-then-right: c -B-> a -A-> b, complete by c -A-> d -B-> b
  for (std::size_t c = 0; c < k && out.unique_factorization; ++c)
    for (std::size_t a = 0; a < k && out.unique_factorization; ++a)
      for (std::size_t b = 0; b < k && out.unique_factorization; ++b) {
        if (!B(c, a) || !A(a, b)) continue;
        std::size_t n = 0;
        for (std::size_t d = 0; d < k; ++d) n += A(c, d) && B(d, b);
        if (n != 1) {
          out.unique_factorization = false;
          out.witness = "up-then-right c=" + S[c] + " a=" + S[a] + " b=" + S[b] + " has " + std::to_string(n) +
                        " completions";
        }
      }
  return out;
}

TilingResult tile_rectangle(const MatrixShift& x, std::size_t width, std::size_t height, TileMode mode,
                            const Budget& budget) {
  require_well_formed(x);
  if (width == 0 || height == 0) throw InvalidArgument("tile_rectangle: width and height must be >= 1");
  if (width * height > budget.max_items) throw BudgetExceeded("tile_rectangle: rectangle exceeds the budget");
  const std::size_t k = x.size();
  const std::size_t cells = width * height;
  TilingResult res;
  std::uint64_t found = 0;
  Block cur(width, height);

  // Depth-first, bottom row first, left to right.
  auto fill = [&](auto&& self, std::size_t t) -> bool {
    if (t == cells) {
      if (++found > budget.max_items)
        throw BudgetExceeded("tile_rectangle: more than " + std::to_string(budget.max_items) + " tilings");
      res.count += 1;
      if (mode != TileMode::count) res.blocks.push_back(cur);
      return mode == TileMode::witness;
    }
    const std::size_t i = t % width, j = t / width;
    for (std::size_t s = 0; s < k; ++s) {
      if (i > 0 && !x.a(cur.at(i - 1, j), s)) continue;
      if (j > 0 && !x.b(cur.at(i, j - 1), s)) continue;
      cur.set(i, j, s);
      if (self(self, t + 1)) return true;
    }
    return false;
  };
  fill(fill, 0);
  if (mode == TileMode::all) std::sort(res.blocks.begin(), res.blocks.end());
  return res;
}

BigInt count_blocks(const MatrixShift& x, std::size_t width, std::size_t height, const Budget& budget) {
  require_well_formed(x);
  if (width == 0 || height == 0) throw InvalidArgument("count_blocks: width and height must be >= 1");
  const std::size_t k = x.size();
  // Column strips of the given height, bottom symbol first.
  std::vector<std::vector<std::size_t>> strips;
  std::vector<std::size_t> cur;
  auto grow = [&](auto&& self) -> void {
    if (cur.size() == height) {
      strips.push_back(cur);
      if (strips.size() > budget.max_items) throw BudgetExceeded("count_blocks: too many column strips");
      return;
    }
    for (std::size_t s = 0; s < k; ++s) {
      if (!cur.empty() && !x.b(cur.back(), s)) continue;
      cur.push_back(s);
      self(self);
      cur.pop_back();
    }
  };
  grow(grow);
  const std::size_t n = strips.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < height && ok; ++j) ok = x.a(strips[u][j], strips[v][j]) == 1;
      if (ok) succ[u].push_back(v);
    }
  std::vector<BigInt> ways(n, 1);
  for (std::size_t col = 1; col < width; ++col) {
    std::vector<BigInt> next(n, 0);
    for (std::size_t u = 0; u < n; ++u)
      if (ways[u] != 0)
        for (auto v : succ[u]) next[v] += ways[u];
    ways = std::move(next);
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

namespace {

double log2_big(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  const auto bits = boost::multiprecision::msb(v);
  if (bits < 1000) return std::log2(v.convert_to<double>());
  const auto shift = bits - 60;
  const BigInt top = v >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace

std::vector<EntropyRow> entropy_table(const MatrixShift& x, std::size_t max_n, const Budget& budget) {
  if (max_n == 0) throw InvalidArgument("entropy_table: max-n must be >= 1");
  if (max_n * max_n > budget.max_items) throw BudgetExceeded("entropy_table: max-n^2 exceeds the budget");
  std::vector<EntropyRow> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    EntropyRow r;
    r.n = n;
    r.count = count_blocks(x, n, n, budget);
    r.rate = r.count == 0 ? 0.0 : log2_big(r.count) / static_cast<double>(n * n);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace weave
