#include "weave/document.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace weave {

const char* to_string(ObjectKind k) noexcept {
  switch (k) {
    case ObjectKind::graph: return "graph";
    case ObjectKind::morphism: return "morphism";
    case ObjectKind::textile: return "textile";
    case ObjectKind::shift: return "shift";
    case ObjectKind::rank2: return "rank2";
    case ObjectKind::automaton: return "ca";
  }
  return "?";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : InvalidArgument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

template <typename T>
auto find_named(const std::vector<T>& v, const std::string& name) -> const T* {
  for (const auto& x : v)
    if (x.name == name) return &x;
  return nullptr;
}

bool same_morphism(const GraphMorphism& a, const GraphMorphism& b) {
  return a.name == b.name && a.domain->name() == b.domain->name() && a.codomain->name() == b.codomain->name() &&
         a.domain->same_structure(*b.domain) && a.codomain->same_structure(*b.codomain) &&
         a.vertex_map == b.vertex_map && a.edge_map == b.edge_map;
}

bool same_textile(const TextileSystem& a, const TextileSystem& b) {
  return a.name == b.name && a.g->name() == b.g->name() && a.h->name() == b.h->name() && same_morphism(a.p, b.p) &&
         same_morphism(a.q, b.q);
}

bool same_rank2(const RankTwoData& a, const RankTwoData& b) {
  return a.name == b.name && a.g1->name() == b.g1->name() && a.g2->name() == b.g2->name() &&
         a.g1->same_structure(*b.g1) && a.g2->same_structure(*b.g2) && a.theta == b.theta;
}

bool same_shift(const MatrixShift& a, const MatrixShift& b) {
  return a.name == b.name && a.alphabet == b.alphabet && a.a == b.a && a.b == b.b;
}

bool same_automaton(const CellularAutomaton& a, const CellularAutomaton& b) {
  return a.name == b.name && a.alphabet == b.alphabet && a.c == b.c && a.window == b.window && a.rule == b.rule;
}

}  // namespace

std::optional<ObjectKind> Document::kind_of(const std::string& name) const {
  for (const auto& [k, n] : order)
    if (n == name) return k;
  return std::nullopt;
}

GraphPtr Document::graph(const std::string& name) const {
  for (const auto& g : graphs)
    if (g->name() == name) return g;
  return nullptr;
}

const GraphMorphism* Document::morphism(const std::string& name) const { return find_named(morphisms, name); }
const TextileSystem* Document::textile(const std::string& name) const { return find_named(textiles, name); }
const MatrixShift* Document::shift(const std::string& name) const { return find_named(shifts, name); }
const RankTwoData* Document::rank2_data(const std::string& name) const { return find_named(rank2, name); }
const CellularAutomaton* Document::automaton(const std::string& name) const { return find_named(automata, name); }

void Document::add(GraphPtr g) {
  if (kind_of(g->name())) throw InvalidArgument("duplicate name '" + g->name() + "'");
  order.emplace_back(ObjectKind::graph, g->name());
  graphs.push_back(std::move(g));
}

void Document::add(GraphMorphism m) {
  if (kind_of(m.name)) throw InvalidArgument("duplicate name '" + m.name + "'");
  order.emplace_back(ObjectKind::morphism, m.name);
  morphisms.push_back(std::move(m));
}

void Document::add(TextileSystem t) {
  if (kind_of(t.name)) throw InvalidArgument("duplicate name '" + t.name + "'");
  auto reuse_graph = [&](GraphPtr& g) {
    if (auto existing = graph(g->name())) {
      if (!existing->same_structure(*g)) throw InvalidArgument("graph '" + g->name() + "' already declared differently");
      g = existing;
    } else {
      add(g);
    }
  };
  reuse_graph(t.g);
  reuse_graph(t.h);
  for (auto* m : {&t.p, &t.q}) {
    m->domain = t.g;
    m->codomain = t.h;
    if (const auto* existing = morphism(m->name)) {
      if (!same_morphism(*existing, *m))
        throw InvalidArgument("morphism '" + m->name + "' already declared differently");
    } else {
      add(*m);
    }
  }
  order.emplace_back(ObjectKind::textile, t.name);
  textiles.push_back(std::move(t));
}

void Document::add(MatrixShift x) {
  if (kind_of(x.name)) throw InvalidArgument("duplicate name '" + x.name + "'");
  order.emplace_back(ObjectKind::shift, x.name);
  shifts.push_back(std::move(x));
}

void Document::add(RankTwoData d) {
  if (kind_of(d.name)) throw InvalidArgument("duplicate name '" + d.name + "'");
  order.emplace_back(ObjectKind::rank2, d.name);
  rank2.push_back(std::move(d));
}

void Document::add(CellularAutomaton ca) {
  if (kind_of(ca.name)) throw InvalidArgument("duplicate name '" + ca.name + "'");
  order.emplace_back(ObjectKind::automaton, ca.name);
  automata.push_back(std::move(ca));
}

namespace {

struct Token {
  std::string text;
  std::size_t column = 1;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      const auto start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back(Token{std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

bool compact_alphabet(const std::vector<std::string>& alphabet) {
  return std::all_of(alphabet.begin(), alphabet.end(), [](const std::string& s) { return s.size() == 1; });
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  Document run() {
    while (pos_ < lines_.size()) {
      const auto& line = lines_[pos_];
      const auto& kw = line.tokens[0].text;
      if (kw == "graph") parse_graph();
      else if (kw == "morphism") parse_morphism();
      else if (kw == "textile") parse_textile();
      else if (kw == "shift") parse_shift();
      else if (kw == "rank2") parse_rank2();
      else if (kw == "ca") parse_automaton();
      else fail(line, 0, "expected a declaration (graph, morphism, textile, shift, rank2, ca), found '" + kw + "'");
    }
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const Line& line, std::size_t tok, const std::string& what) const {
    const auto col = tok < line.tokens.size() ? line.tokens[tok].column
                                              : (line.tokens.empty() ? 1 : line.tokens.back().column);
    throw ParseError(line.number, col, what);
  }

  void expect_count(const Line& line, std::size_t n, const char* form) const {
    if (line.tokens.size() != n) fail(line, std::min(n, line.tokens.size()), std::string("expected '") + form + "'");
  }

  void expect_literal(const Line& line, std::size_t tok, const char* lit) const {
    if (line.tokens[tok].text != lit) fail(line, tok, std::string("expected '") + lit + "'");
  }

  std::string claim_name(const Line& line, std::size_t tok) {
    const auto& name = line.tokens[tok].text;
    if (doc_.kind_of(name)) fail(line, tok, "duplicate name '" + name + "'");
    return name;
  }

  GraphPtr need_graph(const Line& line, std::size_t tok) const {
    const auto& name = line.tokens[tok].text;
    auto g = doc_.graph(name);
    if (!g) fail(line, tok, "unknown graph '" + name + "'");
    return g;
  }

  bool at_section_line(std::initializer_list<const char*> keywords) const {
    if (pos_ >= lines_.size()) return false;
    const auto& kw = lines_[pos_].tokens[0].text;
    return std::any_of(keywords.begin(), keywords.end(), [&](const char* k) { return kw == k; });
  }

  std::size_t vertex_of(const Line& line, std::size_t tok, const DirectedGraph& g) const {
    auto v = g.find_vertex(line.tokens[tok].text);
    if (!v) fail(line, tok, "graph '" + g.name() + "' has no vertex '" + line.tokens[tok].text + "'");
    return *v;
  }

  std::size_t edge_of(const Line& line, std::size_t tok, const DirectedGraph& g) const {
    auto e = g.find_edge(line.tokens[tok].text);
    if (!e) fail(line, tok, "graph '" + g.name() + "' has no edge '" + line.tokens[tok].text + "'");
    return *e;
  }

  void parse_graph() {
    const auto& head = lines_[pos_++];
    expect_count(head, 2, "graph NAME");
    auto g = std::make_shared<DirectedGraph>(claim_name(head, 1));
    while (at_section_line({"vertex", "edge"})) {
      const auto& line = lines_[pos_++];
      if (line.tokens[0].text == "vertex") {
        expect_count(line, 2, "vertex NAME");
        if (g->find_vertex(line.tokens[1].text)) fail(line, 1, "duplicate vertex '" + line.tokens[1].text + "'");
        g->add_vertex(line.tokens[1].text);
      } else {
        expect_count(line, 4, "edge NAME SOURCE RANGE");
        if (g->find_edge(line.tokens[1].text)) fail(line, 1, "duplicate edge '" + line.tokens[1].text + "'");
        const auto s = vertex_of(line, 2, *g);
        const auto r = vertex_of(line, 3, *g);
        g->add_edge(line.tokens[1].text, s, r);
      }
    }
    doc_.add(GraphPtr(std::move(g)));
  }

  void parse_morphism() {
    const auto& head = lines_[pos_++];
    expect_count(head, 6, "morphism NAME : G -> H");
    GraphMorphism m;
    m.name = claim_name(head, 1);
    expect_literal(head, 2, ":");
    m.domain = need_graph(head, 3);
    expect_literal(head, 4, "->");
    m.codomain = need_graph(head, 5);
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    m.vertex_map.assign(m.domain->vertex_count(), unset);
    m.edge_map.assign(m.domain->edge_count(), unset);
    while (at_section_line({"vmap", "emap"})) {
      const auto& line = lines_[pos_++];
      const bool vertex = line.tokens[0].text == "vmap";
      expect_count(line, 3, vertex ? "vmap V W" : "emap E F");
      if (vertex) {
        const auto v = vertex_of(line, 1, *m.domain);
        if (m.vertex_map[v] != unset) fail(line, 1, "vertex '" + line.tokens[1].text + "' mapped twice");
        m.vertex_map[v] = vertex_of(line, 2, *m.codomain);
      } else {
        const auto e = edge_of(line, 1, *m.domain);
        if (m.edge_map[e] != unset) fail(line, 1, "edge '" + line.tokens[1].text + "' mapped twice");
        m.edge_map[e] = edge_of(line, 2, *m.codomain);
      }
    }
    for (std::size_t v = 0; v < m.vertex_map.size(); ++v)
      if (m.vertex_map[v] == unset) fail(head, 1, "morphism '" + m.name + "' does not map vertex '" + m.domain->vertex(v) + "'");
    for (std::size_t e = 0; e < m.edge_map.size(); ++e)
      if (m.edge_map[e] == unset) fail(head, 1, "morphism '" + m.name + "' does not map edge '" + m.domain->edge(e).name + "'");
    doc_.add(std::move(m));
  }

  void parse_textile() {
    const auto& line = lines_[pos_++];
    expect_count(line, 7, "textile NAME : G H P Q");
    TextileSystem t;
    t.name = claim_name(line, 1);
    expect_literal(line, 2, ":");
    t.g = need_graph(line, 3);
    t.h = need_graph(line, 4);
    for (std::size_t tok : {5u, 6u}) {
      const auto* m = doc_.morphism(line.tokens[tok].text);
      if (!m) fail(line, tok, "unknown morphism '" + line.tokens[tok].text + "'");
      if (m->domain != t.g || m->codomain != t.h)
        fail(line, tok, "morphism '" + m->name + "' is not a map " + t.g->name() + " -> " + t.h->name());
      (tok == 5 ? t.p : t.q) = *m;
    }
    doc_.add(std::move(t));
  }

  std::vector<std::string> parse_alphabet(const Line& line) const {
    if (line.tokens.size() < 2) fail(line, 1, "empty alphabet");
    std::vector<std::string> alphabet;
    std::set<std::string> seen;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      if (!seen.insert(line.tokens[t].text).second) fail(line, t, "duplicate symbol '" + line.tokens[t].text + "'");
      alphabet.push_back(line.tokens[t].text);
    }
    return alphabet;
  }

  IntMatrix parse_rows(const Line& head, std::size_t k) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      if (pos_ >= lines_.size()) fail(head, 0, "matrix " + head.tokens[0].text + " needs " + std::to_string(k) + " rows");
      const auto& line = lines_[pos_++];
      if (line.tokens.size() != k) fail(line, std::min(k, line.tokens.size()), "expected " + std::to_string(k) + " entries");
      for (std::size_t j = 0; j < k; ++j) {
        const auto& s = line.tokens[j].text;
        if (s != "0" && s != "1") fail(line, j, "matrix entries must be 0 or 1");
        m.set(i, j, s == "1" ? 1 : 0);
      }
    }
    return m;
  }

  void parse_shift() {
    const auto& head = lines_[pos_++];
    expect_count(head, 2, "shift NAME");
    MatrixShift x;
    x.name = claim_name(head, 1);
    bool have_a = false, have_b = false;
    while (at_section_line({"alphabet", "A", "B"})) {
      const auto& line = lines_[pos_++];
      const auto& kw = line.tokens[0].text;
      if (kw == "alphabet") {
        if (!x.alphabet.empty()) fail(line, 0, "alphabet given twice");
        x.alphabet = parse_alphabet(line);
        continue;
      }
      expect_count(line, 1, kw.c_str());
      if (x.alphabet.empty()) fail(line, 0, "alphabet must precede the matrices");
      bool& have = kw == "A" ? have_a : have_b;
      if (have) fail(line, 0, "matrix " + kw + " given twice");
      have = true;
      (kw == "A" ? x.a : x.b) = parse_rows(line, x.alphabet.size());
    }
    if (x.alphabet.empty() || !have_a || !have_b) fail(head, 1, "shift '" + x.name + "' needs alphabet, A and B");
    doc_.add(std::move(x));
  }

  void parse_rank2() {
    const auto& head = lines_[pos_++];
    expect_count(head, 5, "rank2 NAME : G1 G2");
    RankTwoData d;
    d.name = claim_name(head, 1);
    expect_literal(head, 2, ":");
    d.g1 = need_graph(head, 3);
    d.g2 = need_graph(head, 4);
    while (at_section_line({"theta"})) {
      const auto& line = lines_[pos_++];
      expect_count(line, 6, "theta A B -> B' A'");
      expect_literal(line, 3, "->");
      d.theta.push_back(ThetaEntry{edge_of(line, 1, *d.g1), edge_of(line, 2, *d.g2), edge_of(line, 4, *d.g2),
                                   edge_of(line, 5, *d.g1)});
    }
    doc_.add(std::move(d));
  }

  std::vector<std::size_t> parse_word(const Line& line, std::size_t tok, const CellularAutomaton& ca) const {
    const auto& text = line.tokens[tok].text;
    std::vector<std::string> parts;
    if (text.find(',') != std::string::npos) {
      std::stringstream ss(text);
      for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    } else if (compact_alphabet(ca.alphabet)) {
      for (char ch : text) parts.emplace_back(1, ch);
    } else {
      parts.push_back(text);
    }
    std::vector<std::size_t> word;
    for (const auto& p : parts) {
      auto it = std::find(ca.alphabet.begin(), ca.alphabet.end(), p);
      if (it == ca.alphabet.end()) fail(line, tok, "unknown symbol '" + p + "'");
      word.push_back(static_cast<std::size_t>(it - ca.alphabet.begin()));
    }
    return word;
  }

  void parse_automaton() {
    const auto& head = lines_[pos_++];
    expect_count(head, 2, "ca NAME");
    CellularAutomaton ca;
    ca.name = claim_name(head, 1);
    bool have_c = false, have_window = false;
    while (at_section_line({"alphabet", "C", "window", "rule"})) {
      const auto& line = lines_[pos_++];
      const auto& kw = line.tokens[0].text;
      if (kw == "alphabet") {
        if (!ca.alphabet.empty()) fail(line, 0, "alphabet given twice");
        ca.alphabet = parse_alphabet(line);
      } else if (kw == "C") {
        expect_count(line, 1, "C");
        if (ca.alphabet.empty()) fail(line, 0, "alphabet must precede C");
        if (have_c) fail(line, 0, "matrix C given twice");
        have_c = true;
        ca.c = parse_rows(line, ca.alphabet.size());
      } else if (kw == "window") {
        expect_count(line, 2, "window W");
        if (have_window) fail(line, 0, "window given twice");
        const auto& s = line.tokens[1].text;
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
            s.size() > 3 || std::stoul(s) == 0)
          fail(line, 1, "window must be a positive integer");
        ca.window = std::stoul(s);
        have_window = true;
      } else {
        expect_count(line, 3, "rule WORD SYMBOL");
        if (ca.alphabet.empty() || !have_window) fail(line, 0, "alphabet and window must precede rules");
        auto word = parse_word(line, 1, ca);
        if (word.size() != ca.window)
          fail(line, 1, "rule word has length " + std::to_string(word.size()) + ", window is " + std::to_string(ca.window));
        auto image = parse_word(line, 2, ca);
        if (image.size() != 1) fail(line, 2, "rule image must be one symbol");
        if (!ca.rule.emplace(std::move(word), image[0]).second) fail(line, 1, "rule given twice for this word");
      }
    }
    if (ca.alphabet.empty() || !have_c || !have_window)
      fail(head, 1, "ca '" + ca.name + "' needs alphabet, C and window");
    doc_.add(std::move(ca));
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  Document doc_;
};

void check_token(const std::string& s) {
  if (s.empty() || std::any_of(s.begin(), s.end(), [](char ch) {
        return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '#';
      }))
    throw InvalidArgument("name '" + s + "' cannot be serialized");
}

void write_rows(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
}

}  // namespace

Document parse_document(std::string_view text) { return Parser(text).run(); }

std::string serialize(const Document& doc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [kind, name] : doc.order) {
    if (!first) os << '\n';
    first = false;
    check_token(name);
    switch (kind) {
      case ObjectKind::graph: {
        const auto g = doc.graph(name);
        os << "graph " << name << '\n';
        for (const auto& v : g->vertices()) {
          check_token(v);
          os << "vertex " << v << '\n';
        }
        for (const auto& e : g->edges()) {
          check_token(e.name);
          os << "edge " << e.name << ' ' << g->vertex(e.source) << ' ' << g->vertex(e.range) << '\n';
        }
        break;
      }
      case ObjectKind::morphism: {
        const auto* m = doc.morphism(name);
        os << "morphism " << name << " : " << m->domain->name() << " -> " << m->codomain->name() << '\n';
        for (std::size_t v = 0; v < m->vertex_map.size(); ++v)
          os << "vmap " << m->domain->vertex(v) << ' ' << m->codomain->vertex(m->vertex_map[v]) << '\n';
        for (std::size_t e = 0; e < m->edge_map.size(); ++e)
          os << "emap " << m->domain->edge(e).name << ' ' << m->codomain->edge(m->edge_map[e]).name << '\n';
        break;
      }
      case ObjectKind::textile: {
        const auto* t = doc.textile(name);
        os << "textile " << name << " : " << t->g->name() << ' ' << t->h->name() << ' ' << t->p.name << ' '
           << t->q.name << '\n';
        break;
      }
      case ObjectKind::shift: {
        const auto* x = doc.shift(name);
        os << "shift " << name << "\nalphabet";
        for (const auto& s : x->alphabet) {
          check_token(s);
          os << ' ' << s;
        }
        os << "\nA\n";
        write_rows(os, x->a);
        os << "B\n";
        write_rows(os, x->b);
        break;
      }
      case ObjectKind::rank2: {
        const auto* d = doc.rank2_data(name);
        os << "rank2 " << name << " : " << d->g1->name() << ' ' << d->g2->name() << '\n';
        for (const auto& th : d->theta)
          os << "theta " << d->g1->edge(th.alpha).name << ' ' << d->g2->edge(th.beta).name << " -> "
             << d->g2->edge(th.beta2).name << ' ' << d->g1->edge(th.alpha2).name << '\n';
        break;
      }
      case ObjectKind::automaton: {
        const auto* ca = doc.automaton(name);
        const bool compact = compact_alphabet(ca->alphabet);
        os << "ca " << name << "\nalphabet";
        for (const auto& s : ca->alphabet) {
          check_token(s);
          if (s.find(',') != std::string::npos) throw InvalidArgument("symbol '" + s + "' cannot be serialized");
          os << ' ' << s;
        }
        os << "\nC\n";
        write_rows(os, ca->c);
        os << "window " << ca->window << '\n';
        for (const auto& [word, img] : ca->rule) {
          os << "rule ";
          for (std::size_t t = 0; t < word.size(); ++t) os << (t && !compact ? "," : "") << ca->alphabet[word[t]];
          os << ' ' << ca->alphabet[img] << '\n';
        }
        break;
      }
    }
  }
  return os.str();
}

bool equivalent(const Document& a, const Document& b) {
  if (a.order != b.order) return false;
  for (const auto& [kind, name] : a.order) {
    bool same = false;
    switch (kind) {
      case ObjectKind::graph: {
        const auto ga = a.graph(name), gb = b.graph(name);
        same = ga->same_structure(*gb);
        break;
      }
      case ObjectKind::morphism: same = same_morphism(*a.morphism(name), *b.morphism(name)); break;
      case ObjectKind::textile: same = same_textile(*a.textile(name), *b.textile(name)); break;
      case ObjectKind::shift: same = same_shift(*a.shift(name), *b.shift(name)); break;
      case ObjectKind::rank2: same = same_rank2(*a.rank2_data(name), *b.rank2_data(name)); break;
      case ObjectKind::automaton: same = same_automaton(*a.automaton(name), *b.automaton(name)); break;
    }
    if (!same) return false;
  }
  return true;
}

}  // namespace weave
