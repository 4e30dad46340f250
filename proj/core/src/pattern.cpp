#include "weave/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace weave {

std::size_t PatternShift2D::box_width() const {
  std::ptrdiff_t w = 0;
  for (const auto& c : window) w = std::max(w, c.i + 1);
  return static_cast<std::size_t>(w);
}

std::size_t PatternShift2D::box_height() const {
  std::ptrdiff_t h = 0;
  for (const auto& c : window) h = std::max(h, c.j + 1);
  return static_cast<std::size_t>(h);
}

bool PatternShift2D::admits(const std::vector<std::size_t>& pattern) const {
  return std::binary_search(patterns.begin(), patterns.end(), pattern);
}

PatternShift2D make_pattern_shift(std::string name, std::vector<std::string> alphabet, std::vector<Cell> window,
                                  std::vector<std::vector<std::size_t>> patterns) {
  if (alphabet.empty()) throw InvalidArgument("pattern shift " + name + ": empty alphabet");
  if (window.empty()) throw InvalidArgument("pattern shift " + name + ": empty window");
  if (patterns.empty()) throw InvalidArgument("pattern shift " + name + ": no admissible patterns");
  std::ptrdiff_t mi = window.front().i, mj = window.front().j;
  for (const auto& c : window) {
    mi = std::min(mi, c.i);
    mj = std::min(mj, c.j);
  }
  for (auto& c : window) c = Cell{c.i - mi, c.j - mj};
  std::vector<std::size_t> order(window.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return window[a] < window[b]; });
  for (std::size_t t = 1; t < order.size(); ++t)
    if (window[order[t]] == window[order[t - 1]]) throw InvalidArgument("pattern shift " + name + ": repeated window cell");

  PatternShift2D ps;
  ps.name = std::move(name);
  ps.alphabet = std::move(alphabet);
  for (auto t : order) ps.window.push_back(window[t]);
  for (const auto& p : patterns) {
    if (p.size() != window.size()) throw InvalidArgument("pattern shift " + ps.name + ": pattern size mismatch");
    std::vector<std::size_t> q;
    for (auto t : order) {
      if (p[t] >= ps.alphabet.size()) throw InvalidArgument("pattern shift " + ps.name + ": symbol out of range");
      q.push_back(p[t]);
    }
    ps.patterns.push_back(std::move(q));
  }
  std::sort(ps.patterns.begin(), ps.patterns.end());
  ps.patterns.erase(std::unique(ps.patterns.begin(), ps.patterns.end()), ps.patterns.end());
  return ps;
}

namespace {

/// Assignments on an arbitrary cell region such that each listed window
/// translate is admissible. Cells are filled in the given order; a translate
/// is checked as soon as its last cell is filled.
class RegionFiller {
 public:
  RegionFiller(const PatternShift2D& ps, std::vector<Cell> cells, const std::vector<Cell>& offsets)
      : ps_(ps), cells_(std::move(cells)), checks_(cells_.size()) {
    std::map<Cell, std::size_t> pos;
    for (std::size_t t = 0; t < cells_.size(); ++t) pos[cells_[t]] = t;
    for (const auto& k : offsets) {
      std::vector<std::size_t> where;
      for (const auto& c : ps.window) where.push_back(pos.at(Cell{c.i + k.i, c.j + k.j}));
      const auto last = *std::max_element(where.begin(), where.end());
      checks_[last].push_back(std::move(where));
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    values_.assign(cells_.size(), 0);
    fill(0, visit);
  }

  const std::vector<Cell>& cells() const { return cells_; }

 private:
  template <typename Visit>
  void fill(std::size_t t, Visit& visit) {
    if (t == cells_.size()) {
      visit(values_);
      return;
    }
    for (std::size_t s = 0; s < ps_.alphabet.size(); ++s) {
      values_[t] = s;
      bool ok = true;
      for (const auto& where : checks_[t]) {
        std::vector<std::size_t> pat;
        pat.reserve(where.size());
        for (auto w : where) pat.push_back(values_[w]);
        if (!ps_.admits(pat)) {
          ok = false;
          break;
        }
      }
      if (ok) fill(t + 1, visit);
    }
  }

  const PatternShift2D& ps_;
  std::vector<Cell> cells_;
  std::vector<std::vector<std::vector<std::size_t>>> checks_;
  std::vector<std::size_t> values_;
};

std::vector<Cell> rectangle(std::size_t w, std::size_t h) {
  std::vector<Cell> out;
  for (std::size_t j = 0; j < h; ++j)
    for (std::size_t i = 0; i < w; ++i) out.push_back(Cell{static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j)});
  return out;
}

std::string symbols_name(const std::vector<std::string>& alphabet, const std::vector<Cell>& cells,
                         const std::vector<std::size_t>& values) {
  const bool compact =
      std::all_of(alphabet.begin(), alphabet.end(), [](const std::string& s) { return s.size() == 1; });
  std::map<std::ptrdiff_t, std::vector<std::pair<std::ptrdiff_t, std::size_t>>> rows;
  for (std::size_t t = 0; t < cells.size(); ++t) rows[cells[t].j].emplace_back(cells[t].i, values[t]);
  std::string out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (it != rows.rbegin()) out += '/';
    std::sort(it->second.begin(), it->second.end());
    bool first = true;
    for (const auto& [i, v] : it->second) {
      if (!first && !compact) out += ',';
      out += alphabet[v];
      first = false;
    }
  }
  return out;
}

}  // namespace

std::vector<Block> enumerate_pattern_blocks(const PatternShift2D& ps, std::size_t width, std::size_t height,
                                            const Budget& budget) {
  if (width == 0 || height == 0) throw InvalidArgument("enumerate_pattern_blocks: width and height must be >= 1");
  if (width * height > budget.max_items) throw BudgetExceeded("enumerate_pattern_blocks: block exceeds the budget");
  std::vector<Cell> offsets;
  const auto bw = ps.box_width(), bh = ps.box_height();
  if (bw <= width && bh <= height) offsets = rectangle(width - bw + 1, height - bh + 1);
  RegionFiller filler(ps, rectangle(width, height), offsets);
  std::vector<Block> out;
  filler.run([&](const std::vector<std::size_t>& v) {
    Block b(width, height);
    for (std::size_t t = 0; t < v.size(); ++t) b.set(t % width, t / width, v[t]);
    out.push_back(std::move(b));
    if (out.size() > budget.max_items) throw BudgetExceeded("enumerate_pattern_blocks: too many blocks");
  });
  std::sort(out.begin(), out.end());
  return out;
}

PatternShift2D pattern_of_matrix_shift(const MatrixShift& x) {
  require_well_formed(x);
  std::vector<std::vector<std::size_t>> pats;
  const auto k = x.size();
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t right = 0; right < k; ++right)
      for (std::size_t up = 0; up < k; ++up)
        if (x.a(s, right) && x.b(s, up)) pats.push_back({s, right, up});
  return make_pattern_shift(x.name + ".nn", x.alphabet, {{0, 0}, {1, 0}, {0, 1}}, std::move(pats));
}

Recoding recode_to_matrix_shift(const PatternShift2D& ps, const Budget& budget, std::size_t max_side) {
  const auto bw = ps.box_width(), bh = ps.box_height();
  if (bw > max_side || bh > max_side)
    throw BudgetExceeded("recode_to_matrix_shift: window box " + std::to_string(bw) + "x" + std::to_string(bh) +
                         " exceeds the side bound " + std::to_string(max_side));
  const std::set<Cell> corner{{0, 0}, {1, 0}, {0, 1}};
  const bool nearest = std::all_of(ps.window.begin(), ps.window.end(), [&](const Cell& c) { return corner.count(c); }) &&
                       std::find(ps.window.begin(), ps.window.end(), Cell{0, 0}) != ps.window.end();

  Recoding out;
  std::vector<std::vector<std::size_t>> symbols;
  if (nearest) {
    out.region = ps.window;
    symbols = ps.patterns;
  } else {
    out.region = rectangle(bw, bh);
    RegionFiller filler(ps, out.region, {Cell{0, 0}});
    filler.run([&](const std::vector<std::size_t>& v) {
      symbols.push_back(v);
      if (symbols.size() > budget.max_items) throw BudgetExceeded("recode_to_matrix_shift: alphabet too large");
    });
  }
  if (symbols.empty()) throw InvalidArgument("recode_to_matrix_shift: no admissible symbols");

  std::map<Cell, std::size_t> pos;
  for (std::size_t t = 0; t < out.region.size(); ++t) pos[out.region[t]] = t;
  auto agree = [&](const std::vector<std::size_t>& p, const std::vector<std::size_t>& q, Cell shift) {
    for (std::size_t t = 0; t < out.region.size(); ++t) {
      auto it = pos.find(Cell{out.region[t].i - shift.i, out.region[t].j - shift.j});
      if (it != pos.end() && p[t] != q[it->second]) return false;
    }
    return true;
  };

  auto& x = out.shift;
  x.name = ps.name + ".recoded";
  const auto k = symbols.size();
  for (const auto& s : symbols) x.alphabet.push_back(symbols_name(ps.alphabet, out.region, s));
  x.a = IntMatrix(k, k);
  x.b = IntMatrix(k, k);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v) {
      if (agree(symbols[u], symbols[v], Cell{1, 0})) x.a.set(u, v, 1);
      if (agree(symbols[u], symbols[v], Cell{0, 1})) x.b.set(u, v, 1);
    }
  return out;
}

std::vector<std::vector<std::size_t>> admissible_words(const CellularAutomaton& ca) {
  const auto k = ca.alphabet.size();
  if (k == 0) throw InvalidArgument("cellular automaton " + ca.name + ": empty alphabet");
  if (ca.c.rows() != k || ca.c.cols() != k || !ca.c.is_binary())
    throw InvalidArgument("cellular automaton " + ca.name + ": C must be a " + std::to_string(k) + "x" +
                          std::to_string(k) + " 0/1 matrix");
  if (ca.window == 0) throw InvalidArgument("cellular automaton " + ca.name + ": window must be >= 1");
  std::vector<std::vector<std::size_t>> words;
  std::vector<std::size_t> cur;
  auto grow = [&](auto&& self) -> void {
    if (cur.size() == ca.window) {
      words.push_back(cur);
      return;
    }
    for (std::size_t s = 0; s < k; ++s) {
      if (!cur.empty() && !ca.c(cur.back(), s)) continue;
      cur.push_back(s);
      self(self);
      cur.pop_back();
    }
  };
  grow(grow);
  return words;
}

void require_total_rule(const CellularAutomaton& ca) {
  const auto words = admissible_words(ca);
  for (const auto& w : words)
    if (!ca.rule.count(w)) {
      std::string s;
      for (auto v : w) s += (s.empty() ? "" : ",") + ca.alphabet[v];
      throw ValidationError("cellular automaton " + ca.name + ": rule undefined on admissible word " + s);
    }
  for (const auto& [w, img] : ca.rule) {
    if (img >= ca.alphabet.size()) throw ValidationError("cellular automaton " + ca.name + ": rule image out of range");
    if (!std::binary_search(words.begin(), words.end(), w))
      throw ValidationError("cellular automaton " + ca.name + ": rule defined on an inadmissible word");
  }
}

MatrixShift from_cellular_automaton(const CellularAutomaton& ca) {
  require_total_rule(ca);
  const auto words = admissible_words(ca);
  if (words.empty()) throw InvalidArgument("cellular automaton " + ca.name + ": Y has no admissible words");
  const bool compact =
      std::all_of(ca.alphabet.begin(), ca.alphabet.end(), [](const std::string& s) { return s.size() == 1; });
  MatrixShift x;
  x.name = ca.name + ".spacetime";
  for (const auto& w : words) {
    std::string s;
    for (std::size_t t = 0; t < w.size(); ++t) s += (t && !compact ? "," : "") + ca.alphabet[w[t]];
    x.alphabet.push_back(s);
  }
  const auto k = words.size();
  const auto w = ca.window;
  x.a = IntMatrix(k, k);
  x.b = IntMatrix(k, k);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v) {
      const auto& wu = words[u];
      const auto& wv = words[v];
      const bool overlap = std::equal(wu.begin() + 1, wu.end(), wv.begin(), wv.begin() + (w - 1));
      if (overlap && ca.c(wu.back(), wv.back())) x.a.set(u, v, 1);
      if (wv.front() == ca.rule.at(wu)) x.b.set(u, v, 1);
    }
  return x;
}

PatternShift2D pattern_of_cellular_automaton(const CellularAutomaton& ca) {
  require_total_rule(ca);
  const auto w = ca.window;
  const auto width = std::max<std::size_t>(w, 2);
  std::vector<Cell> window;
  for (std::size_t i = 0; i < width; ++i) window.push_back(Cell{static_cast<std::ptrdiff_t>(i), 0});
  window.push_back(Cell{0, 1});
  const auto k = ca.alphabet.size();
  std::vector<std::vector<std::size_t>> pats;
  std::vector<std::size_t> bottom;
  auto grow = [&](auto&& self) -> void {
    if (bottom.size() == width) {
      auto pat = bottom;
      pat.push_back(ca.rule.at(std::vector<std::size_t>(bottom.begin(), bottom.begin() + w)));
      pats.push_back(std::move(pat));
      return;
    }
    for (std::size_t s = 0; s < k; ++s) {
      if (!bottom.empty() && !ca.c(bottom.back(), s)) continue;
      bottom.push_back(s);
      self(self);
      bottom.pop_back();
    }
  };
  grow(grow);
  return make_pattern_shift(ca.name + ".pattern", ca.alphabet, std::move(window), std::move(pats));
}

}  // namespace weave
