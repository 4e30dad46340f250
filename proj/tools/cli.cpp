#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"
#include "weave/document.hpp"
#include "weave/invariants.hpp"
#include "weave/pattern.hpp"
#include "weave/rank2.hpp"
#include "weave/shift2d.hpp"
#include "weave/textile.hpp"
#include "weave/tower.hpp"

namespace weave::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Set by a command to signal exit code 1 without throwing.
struct Outcome {
  bool domain_failure = false;
};

struct Loaded {
  Document doc;
  std::string source;
};

Loaded load(const std::string& path, Report& rep) {
  std::ifstream in(path);
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return {parse_document(ss.str()), path};
  }
  auto stem = std::filesystem::path(path).stem().string();
  if (auto text = example_text(stem)) {
    if (std::filesystem::path(path).has_parent_path() || path != stem)
      rep.notes.push_back("no file at " + path + "; using built-in example " + stem);
    return {parse_document(*text), "builtin:" + stem};
  }
  throw UsageError("cannot read " + path + " (and no built-in example named " + stem + ")");
}

std::string pick(const Document& doc, const std::string& wanted, std::initializer_list<ObjectKind> kinds,
                 const char* what) {
  auto allowed = [&](ObjectKind k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
  if (!wanted.empty()) {
    auto k = doc.kind_of(wanted);
    if (!k) throw UsageError("no object named " + wanted);
    if (!allowed(*k)) throw UsageError(wanted + " is a " + to_string(*k) + ", expected " + what);
    return wanted;
  }
  for (const auto& [k, name] : doc.order)
    if (allowed(k)) return name;
  throw UsageError(std::string("the document has no ") + what);
}

/// A shift object, or the space-time shift of a cellular automaton.
MatrixShift shift_object(const Document& doc, const std::string& wanted, Report& rep) {
  const auto name = pick(doc, wanted, {ObjectKind::shift, ObjectKind::automaton}, "shift");
  if (const auto* x = doc.shift(name)) {
    require_well_formed(*x);
    return *x;
  }
  rep.notes.push_back(name + " is a cellular automaton; using its space-time shift over admissible words");
  return from_cellular_automaton(*doc.automaton(name));
}

Side parse_side(const std::string& s) {
  if (s == "A") return Side::A;
  if (s == "B") return Side::B;
  throw UsageError("--side must be A or B");
}

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

void add_matrix_text(Report& rep, const IntMatrix& m, const std::string& indent = "  ") {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string line = indent;
    for (std::size_t j = 0; j < m.cols(); ++j) line += (j ? " " : "") + std::to_string(m(i, j));
    rep.text.push_back(line);
  }
}

std::string lift_status(const LiftCheck& c) {
  if (c.covering()) return "covering";
  if (c.fibration()) return "fibration, not covering";
  return "not a fibration";
}

std::string lifting_summary(const LiftReport& r) {
  const auto p = lift_status(r.p), q = lift_status(r.q);
  if (p == q) {
    if (p == "covering") return "p,q coverings";
    if (p == "fibration, not covering") return "p,q fibrations, not coverings";
    return "p,q not fibrations";
  }
  return "p " + p + "; q " + q;
}

json lift_check_json(const LiftCheck& c) {
  json w = json::array();
  for (const auto& x : c.witnesses)
    w.push_back({{"mode", x.mode == LiftMode::source ? "s" : "r"},
                 {"vertex", x.vertex},
                 {"h_edge", x.h_edge},
                 {"count", x.count}});
  return json{{"s_lift_exists", c.s_exists}, {"s_lift_unique", c.s_unique}, {"r_lift_exists", c.r_exists},
              {"r_lift_unique", c.r_unique}, {"fibration", c.fibration()}, {"covering", c.covering()},
              {"witnesses", w}};
}

void add_lift_text(Report& rep, const char* label, const LiftCheck& c) {
  rep.text.push_back(std::string(label) + ": " + lift_status(c) + " (s-lift exists " + (c.s_exists ? "yes" : "no") +
                     ", unique " + (c.s_unique ? "yes" : "no") + "; r-lift exists " + (c.r_exists ? "yes" : "no") +
                     ", unique " + (c.r_unique ? "yes" : "no") + ")");
  for (const auto& w : c.witnesses)
    if (w.count == 0)
      rep.text.push_back(std::string("  no ") + (w.mode == LiftMode::source ? "s" : "r") + "-lift of " + w.h_edge +
                         " at " + w.vertex);
}

std::string emit_textile(const TextileSystem& t) {
  Document d;
  d.add(t);
  return serialize(d);
}

bool is_full_shift(const MatrixShift& x) {
  return x.size() >= 2 && x.a == IntMatrix::all_ones(x.size()) && x.b == IntMatrix::all_ones(x.size());
}

// ---------------------------------------------------------------------------

struct Options {
  std::string format = "text";
  std::uint64_t budget = Budget{}.max_items;
  std::string file;
  std::string object;
  std::string side = "A";
  std::size_t m = 0, n = 0;
  std::size_t levels = 1;
  std::size_t level = 1;
  std::size_t max_n = 1;
  bool oracle = false;
  bool count_only = false;
  bool witness = false;
  bool all = false;
  bool emit = false;
  std::string morphism = "p";
  std::string mode = "s";
  std::string path;
  std::string anchor;
  std::string example;
};

Outcome cmd_validate(const Options& o, Report& rep) {
  auto [doc, source] = load(o.file, rep);
  Outcome out;
  json objects = json::array();
  std::vector<std::pair<ObjectKind, std::string>> selected;
  if (o.object.empty()) {
    selected = doc.order;
  } else {
    auto k = doc.kind_of(o.object);
    if (!k) throw UsageError("no object named " + o.object);
    selected.emplace_back(*k, o.object);
  }
  if (selected.empty()) rep.text.push_back("empty document");
  for (const auto& [kind, name] : selected) {
    json obj{{"name", name}, {"kind", to_string(kind)}};
    const auto mark = rep.text.size();
    bool ok = true;
    std::string line;
    switch (kind) {
      case ObjectKind::graph: {
        auto g = doc.graph(name);
        line = "graph " + name + ": " + std::to_string(g->vertex_count()) + " vertices, " +
               std::to_string(g->edge_count()) + " edges";
        obj["vertices"] = g->vertex_count();
        obj["edges"] = g->edge_count();
        break;
      }
      case ObjectKind::morphism: {
        const auto* m = doc.morphism(name);
        const auto r = validate_morphism(*m);
        ok = r.valid();
        obj["surjective"] = r.surjective();
        line = "morphism " + name + (ok ? " valid" : " INVALID") + (r.surjective() ? ", surjective" : ", not surjective");
        for (auto e : r.source_failures) rep.text.push_back("  source fails at edge " + m->domain->edge(e).name);
        for (auto e : r.range_failures) rep.text.push_back("  range fails at edge " + m->domain->edge(e).name);
        break;
      }
      case ObjectKind::textile: {
        const auto* t = doc.textile(name);
        const auto r = validate_textile(*t);
        ok = r.valid();
        if (ok) {
          const auto lr = lifting_report(*t);
          line = "textile " + name + " valid; " + lifting_summary(lr);
          obj["lifting"] = {{"p", lift_check_json(lr.p)}, {"q", lift_check_json(lr.q)}};
        } else {
          line = "textile " + name + " INVALID";
          json failures = json::array();
          for (const auto& f : describe_failures(*t, r)) {
            rep.text.push_back("  " + f);
            failures.push_back(f);
          }
          obj["failures"] = failures;
        }
        break;
      }
      case ObjectKind::shift: {
        const auto* x = doc.shift(name);
        require_well_formed(*x);
        const auto c = is_coherent(x->a, x->b);
        line = "shift " + name + ": " + std::to_string(x->size()) + " symbols, " +
               (c.coherent() ? "coherent" : "not coherent (" + c.which + ")");
        obj["symbols"] = x->size();
        obj["coherent"] = c.coherent();
        break;
      }
      case ObjectKind::rank2: {
        const auto problems = check_rank2_data(*doc.rank2_data(name));
        ok = problems.empty();
        line = "rank2 " + name + (ok ? " valid" : " INVALID");
        for (const auto& p : problems) rep.text.push_back("  " + p);
        obj["failures"] = problems;
        break;
      }
      case ObjectKind::automaton: {
        const auto* ca = doc.automaton(name);
        try {
          require_total_rule(*ca);
          line = "ca " + name + " valid; " + std::to_string(admissible_words(*ca).size()) + " admissible words";
        } catch (const ValidationError& e) {
          ok = false;
          line = "ca " + name + " INVALID";
          rep.text.push_back(std::string("  ") + e.what());
          obj["failures"] = {e.what()};
        }
        break;
      }
    }
    obj["valid"] = ok;
    if (!ok) out.domain_failure = true;
    rep.text.insert(rep.text.begin() + static_cast<std::ptrdiff_t>(mark), line);
    objects.push_back(obj);
  }
  rep.result = json{{"source", source}, {"objects", objects}, {"valid", !out.domain_failure}};
  return out;
}

Outcome cmd_dual(const Options& o, Report& rep) {
  auto [doc, source] = load(o.file, rep);
  const auto name = pick(doc, o.object, {ObjectKind::textile}, "textile");
  const auto* t = doc.textile(name);
  require_valid(*t);
  const auto d = dual(*t);
  const auto text = emit_textile(d);
  rep.result = json{{"object", name}, {"text", text}};
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) rep.text.push_back(line);
  return {};
}

Outcome cmd_blocks(const Options& o, const Budget& budget, Report& rep) {
  auto [doc, source] = load(o.file, rep);
  if (o.m == 0 || o.n == 0) throw UsageError("block dimensions must be positive");
  const auto name = pick(doc, o.object, {ObjectKind::shift, ObjectKind::automaton}, "shift");
  std::vector<std::string> names;
  BigInt count;
  if (const auto* ca = doc.automaton(name)) {
    const auto ps = pattern_of_cellular_automaton(*ca);
    rep.notes.push_back(name + " is a cellular automaton; blocks are over its state alphabet");
    const auto blocks = enumerate_pattern_blocks(ps, o.m, o.n, budget);
    count = blocks.size();
    if (!o.count_only) {
      MatrixShift view{ps.name, ps.alphabet, IntMatrix(ps.alphabet.size(), ps.alphabet.size()),
                       IntMatrix(ps.alphabet.size(), ps.alphabet.size())};
      for (const auto& b : blocks) names.push_back(block_name(view, b));
    }
  } else {
    const auto& x = *doc.shift(name);
    require_well_formed(x);
    if (o.count_only) {
      count = count_blocks(x, o.m, o.n, budget);
    } else {
      const auto blocks = enumerate_blocks(x, o.m, o.n, budget);
      count = blocks.size();
      for (const auto& b : blocks) names.push_back(block_name(x, b));
    }
  }
  rep.result = json{{"object", name}, {"width", o.m}, {"height", o.n}, {"count", bigint_json(count)},
                    {"admissibility", "local"}};
  if (!o.count_only) rep.result["blocks"] = names;
  rep.text.push_back("|B(" + std::to_string(o.m) + "," + std::to_string(o.n) + ")| = " + count.str() +
                     " (locally admissible)");
  for (const auto& s : names) rep.text.push_back("  " + s);
  return {};
}

Outcome cmd_textile_of(const Options& o, const Budget& budget, Report& rep) {
  auto [doc, source] = load(o.file, rep);
  const auto x = shift_object(doc, o.object, rep);
  if (o.m < 2 || o.n < 2) throw UsageError("textile-of needs M >= 2 and N >= 2");
  const auto t = textile_of(x, o.m, o.n, budget);
  const auto text = emit_textile(t);
  rep.result = json{{"object", x.name}, {"m", o.m}, {"n", o.n}, {"text", text}};
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) rep.text.push_back(line);
  return {};
}

Outcome cmd_tower(const Options& o, const Budget& budget, Report& rep) {
  auto [doc, source] = load(o.file, rep);
  const auto x = shift_object(doc, o.object, rep);
  const auto side = parse_side(o.side);
  if (o.levels == 0) throw UsageError("--levels must be at least 1");
  const auto tw = tower(x, side, o.levels, budget);
  Outcome out;
  json levels = json::array();
  const char* mname = side == Side::A ? "A" : "B";
  bool all_agree = true;
  for (const auto& lvl : tw.levels) {
    std::vector<std::string> alpha;
    for (const auto& b : lvl.strip_alphabet) alpha.push_back(block_name(x, b));
    json jl{{"n", lvl.n}, {"k", lvl.k()}, {"alphabet", alpha}, {"matrix", matrix_json(lvl.matrix)},
            {"parent_indices", lvl.parent_indices}, {"deleted_indices", lvl.deleted_indices}};
    rep.text.push_back(std::string(mname) + "_" + std::to_string(lvl.n) + " (k=" + std::to_string(lvl.k()) +
                       "; strips " + join(alpha) + ")");
    add_matrix_text(rep, lvl.matrix);
    if (lvl.n > 1)
      rep.text.push_back("  deleted parent indices: " +
                         (lvl.deleted_indices.empty() ? std::string("none") : join_numbers(lvl.deleted_indices)));
    if (o.oracle) {
      const auto orc = oracle_level(x, side, lvl.n, budget);
      const bool agree = orc.matrix == lvl.matrix && orc.strip_alphabet == lvl.strip_alphabet;
      all_agree = all_agree && agree;
      jl["oracle_agrees"] = agree;
      rep.text.push_back(std::string("  oracle: ") + (agree ? "agrees" : "DISAGREES"));
    }
    levels.push_back(jl);
  }
  const auto ks = tw.k_sequence();
  rep.text.push_back("k = (" + join_numbers(ks) + ")");
  std::vector<bool> tail(tw.tail_deletion.begin(), tw.tail_deletion.end());
  if (!tail.empty()) {
    const bool all_tail = std::all_of(tail.begin(), tail.end(), [](bool b) { return b; });
    rep.text.push_back(std::string("deletions are the trailing indices at every step: ") + (all_tail ? "yes" : "no"));
  }
  rep.result = json{{"object", x.name}, {"side", mname}, {"levels", levels}, {"tail_deletion", tail}};
  rep.result["k_sequence"] = ks;
  if (o.oracle) {
    rep.result["oracle_agrees"] = all_agree;
    rep.text.push_back(std::string("oracle agreement: ") + (all_agree ? "yes" : "NO"));
    if (!all_agree) out.domain_failure = true;
  }
  for (const auto& w : tw.warnings) rep.notes.push_back(w);
  return out;
}

Outcome cmd_invariants(const Options& o, const Budget& budget, Report& rep) {
  auto [doc, source] = load(o.file, rep);
  const auto x = shift_object(doc, o.object, rep);
  const auto side = parse_side(o.side);
  if (o.level == 0) throw UsageError("--level must be at least 1");
  const auto ar = algebra_report(x, side, o.level, budget);
  const auto& a = ar.algebra;
  const auto bf = bowen_franks(a.matrix);
  rep.result = json{{"object", x.name},
                    {"side", to_string(side)},
                    {"level", o.level},
                    {"label", ar.label},
                    {"tag", a.tag.to_string()},
                    {"matrix", matrix_json(a.matrix)},
                    {"k0", group_json(a.k.k0)},
                    {"k1", group_json(a.k.k1)},
                    {"bowen_franks", group_json(bf)},
                    {"irreducible", a.flags.irreducible},
                    {"permutation", a.flags.permutation},
                    {"simple_purely_infinite", a.flags.simple_purely_infinite},
                    {"simple_by_level", ar.simple_by_level}};
  rep.result["k_sequence"] = ar.k_sequence;
  rep.result["group"] = group_json(a.k.k0);
  rep.text.push_back(ar.label + ": " + a.tag.to_string());
  rep.text.push_back("K0 = " + a.k.k0.to_string() + ", K1 = " + a.k.k1.to_string() + ", BF = " + bf.to_string());
  rep.text.push_back(std::string("irreducible ") + (a.flags.irreducible ? "yes" : "no") + ", permutation " +
                     (a.flags.permutation ? "yes" : "no") + ", simple purely infinite " +
                     (a.flags.simple_purely_infinite ? "yes" : "no"));
  rep.text.push_back("k = (" + join_numbers(ar.k_sequence) + ")");
  for (const auto& n : ar.notes) rep.notes.push_back(n);
  return {};
}

Outcome cmd_check_lifting(const Options& o, const Budget& budget, Report& rep) {
  auto [doc, source] = load(o.file, rep);
  const auto name =
      pick(doc, o.object, {ObjectKind::textile, ObjectKind::shift, ObjectKind::automaton}, "textile or shift");
  Outcome out;
  if (const auto* t = doc.textile(name)) {
    require_valid(*t);
    const auto lr = lifting_report(*t);
    rep.result = json{{"object", name}, {"p", lift_check_json(lr.p)}, {"q", lift_check_json(lr.q)},
                      {"summary", lifting_summary(lr)}};
    rep.text.push_back(name + ": " + lifting_summary(lr));
    add_lift_text(rep, "p", lr.p);
    add_lift_text(rep, "q", lr.q);
    return out;
  }
  const auto x = shift_object(doc, name, rep);
  const auto lr = lifting_report(textile_of(x, 2, 2, budget));
  const auto corner = corner_fibration_report(x);
  const bool agree = corner == lr;
  rep.result = json{{"object", x.name},   {"textile", "T(2,2)"},      {"p", lift_check_json(lr.p)},
                    {"q", lift_check_json(lr.q)}, {"summary", lifting_summary(lr)}, {"corner_agrees", agree}};
  rep.text.push_back(x.name + " T(2,2): " + lifting_summary(lr));
  add_lift_text(rep, "p", lr.p);
  add_lift_text(rep, "q", lr.q);
  rep.text.push_back(std::string("corner-completion cross-check: ") + (agree ? "agrees" : "DISAGREES"));
  if (!agree) out.domain_failure = true;
  if (is_full_shift(x) && !lr.p.covering())
    rep.notes.push_back(
        "full shift: every (vertex, edge) pair has " + std::to_string(x.size()) +
        " lifts (the free corner symbol), so p and q are fibrations but not coverings under the vertex-by-edge "
        "definition, although they are commonly described as covering maps");
  return out;
}

std::vector<std::string> split_path(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    if (part.empty()) throw UsageError("empty edge name in --path");
    out.push_back(part);
  }
  return out;
}

Outcome cmd_count_lifts(const Options& o, Report& rep) {
  auto [doc, source] = load(o.file, rep);
  const auto name = pick(doc, o.object, {ObjectKind::textile}, "textile");
  const auto* t = doc.textile(name);
  require_valid(*t);
  if (o.morphism != "p" && o.morphism != "q") throw UsageError("--morphism must be p or q");
  if (o.mode != "s" && o.mode != "r") throw UsageError("--mode must be s or r");
  const auto& phi = o.morphism == "p" ? t->p : t->q;
  std::vector<std::size_t> path;
  for (const auto& e : split_path(o.path)) {
    auto idx = t->h->find_edge(e);
    if (!idx) throw UsageError("graph " + t->h->name() + " has no edge " + e);
    path.push_back(*idx);
  }
  std::optional<std::size_t> anchor;
  if (!o.anchor.empty()) {
    auto v = t->h->find_vertex(o.anchor);
    if (!v) throw UsageError("graph " + t->h->name() + " has no vertex " + o.anchor);
    anchor = *v;
  }
  if (path.empty() && !anchor) throw UsageError("an empty path needs --anchor VERTEX");
  const auto lc = count_lifts(phi, path, o.mode == "s" ? LiftMode::source : LiftMode::range, anchor);
  json per = json::object();
  for (const auto& [v, c] : lc.per_vertex) {
    per[t->g->vertex(v)] = bigint_json(c);
    rep.text.push_back("  " + t->g->vertex(v) + ": " + c.str());
  }
  rep.result = json{{"object", name},      {"morphism", o.morphism}, {"mode", o.mode},
                    {"path", split_path(o.path)}, {"per_vertex", per}, {"total", bigint_json(lc.total)}};
  rep.text.insert(rep.text.begin(), "lifts of (" + o.path + ") under " + o.morphism + ", " + o.mode +
                                        "-anchored: total " + lc.total.str());
  return {};
}

Outcome cmd_rank2_check(const Options& o, Report& rep) {
  auto [doc, source] = load(o.file, rep);
  const auto name =
      pick(doc, o.object, {ObjectKind::shift, ObjectKind::rank2, ObjectKind::automaton}, "shift or rank2 data");
  Outcome out;
  if (const auto* d = doc.rank2_data(name)) {
    const auto problems = check_rank2_data(*d);
    if (!problems.empty()) {
      for (const auto& p : problems) rep.text.push_back("  " + p);
      rep.text.insert(rep.text.begin(), "rank2 " + name + " INVALID");
      rep.result = json{{"object", name}, {"valid", false}, {"failures", problems}};
      out.domain_failure = true;
      return out;
    }
    const auto t = from_rank2(*d);
    const auto lr = lifting_report(t);
    rep.result = json{{"object", name},
                      {"valid", true},
                      {"textile", emit_textile(t)},
                      {"q_s_unique", lr.q.s_exists && lr.q.s_unique},
                      {"p_r_unique", lr.p.r_exists && lr.p.r_unique},
                      {"p", lift_check_json(lr.p)},
                      {"q", lift_check_json(lr.q)}};
    rep.text.push_back("rank2 " + name + " valid; textile has " + std::to_string(t.g->edge_count()) + " tiles");
    rep.text.push_back(std::string("q unique s-lifting: ") + (lr.q.s_exists && lr.q.s_unique ? "yes" : "no") +
                       ", p unique r-lifting: " + (lr.p.r_exists && lr.p.r_unique ? "yes" : "no"));
    return out;
  }
  const auto x = shift_object(doc, name, rep);
  const auto rc = rank2_check(x);
  rep.result = json{{"object", x.name}, {"commute", rc.commute}, {"unique_factorization", rc.unique_factorization}};
  if (rc.witness) rep.result["witness"] = *rc.witness;
  rep.text.push_back(x.name + ": AB = BA " + (rc.commute ? "yes" : "no") + ", unique factorization " +
                     (rc.unique_factorization ? "yes" : "no"));
  if (rc.witness) rep.text.push_back("  witness: " + *rc.witness);
  return out;
}

Outcome cmd_tile(const Options& o, const Budget& budget, Report& rep) {
  auto [doc, source] = load(o.file, rep);
  const auto x = shift_object(doc, o.object, rep);
  if (o.witness && o.all) throw UsageError("--witness and --all are exclusive");
  if (o.m == 0 || o.n == 0) throw UsageError("rectangle dimensions must be positive");
  const auto mode = o.all ? TileMode::all : o.witness ? TileMode::witness : TileMode::count;
  const auto r = tile_rectangle(x, o.m, o.n, mode, budget);
  std::vector<std::string> names;
  for (const auto& b : r.blocks) names.push_back(block_name(x, b));
  rep.result = json{{"object", x.name}, {"width", o.m}, {"height", o.n}, {"count", bigint_json(r.count)}};
  if (mode != TileMode::count) rep.result["blocks"] = names;
  rep.text.push_back(std::to_string(o.m) + "x" + std::to_string(o.n) + " tilings: " + r.count.str());
  if (mode == TileMode::witness && names.empty()) rep.text.push_back("  no tiling exists");
  for (const auto& s : names) rep.text.push_back("  " + s);
  return {};
}

Outcome cmd_entropy(const Options& o, const Budget& budget, Report& rep) {
  auto [doc, source] = load(o.file, rep);
  const auto x = shift_object(doc, o.object, rep);
  if (o.max_n == 0) throw UsageError("--max-n must be at least 1");
  const auto rows = entropy_table(x, o.max_n, budget);
  json table = json::array();
  for (const auto& r : rows) {
    table.push_back({{"n", r.n}, {"count", bigint_json(r.count)}, {"rate", r.rate}});
    std::ostringstream os;
    os << "  n=" << r.n << "  |B(n,n)|=" << r.count << "  log2/n^2=" << std::setprecision(12) << r.rate;
    rep.text.push_back(os.str());
  }
  rep.result = json{{"object", x.name}, {"table", table}};
  rep.notes.push_back("desk-scale estimate from locally admissible squares; no limit is claimed");
  return {};
}

Outcome cmd_example(const Options& o, Report& rep) {
  if (o.example.empty()) {
    rep.result = json{{"examples", example_names()}};
    for (const auto& n : example_names()) rep.text.push_back(n);
    return {};
  }
  auto text = example_text(o.example);
  if (!text) throw UsageError("no built-in example named " + o.example);
  const auto doc = parse_document(*text);
  json objects = json::array();
  for (const auto& [k, n] : doc.order) objects.push_back({{"name", n}, {"kind", to_string(k)}});
  rep.result = json{{"name", o.example}, {"text", std::string(*text)}, {"objects", objects}};
  std::istringstream is{std::string(*text)};
  for (std::string line; std::getline(is, line);) rep.text.push_back(line);
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-dimensional shifts of finite type, textile systems and their invariants", "weave"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", o.budget, "Maximum number of enumerated items")->check(CLI::PositiveNumber);

  auto file_and_object = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Input file or built-in example name")->required();
    sub->add_option("--object", o.object, "Object name (default: first suitable object)");
  };

  auto* validate = app.add_subcommand("validate", "Validate every object (or one)");
  file_and_object(validate);
  auto* dual_cmd = app.add_subcommand("dual", "Emit the dual textile");
  file_and_object(dual_cmd);
  auto* blocks = app.add_subcommand("blocks", "Enumerate locally admissible M x N blocks");
  file_and_object(blocks);
  blocks->add_option("M", o.m, "Width")->required();
  blocks->add_option("N", o.n, "Height")->required();
  blocks->add_flag("--count-only", o.count_only, "Print only the count");
  auto* textile_cmd = app.add_subcommand("textile-of", "Emit the textile T(M,N) of a shift");
  file_and_object(textile_cmd);
  textile_cmd->add_option("M", o.m, "Width")->required();
  textile_cmd->add_option("N", o.n, "Height")->required();
  auto* tower_cmd = app.add_subcommand("tower", "Strip-shift tower A_n or B_n");
  file_and_object(tower_cmd);
  tower_cmd->add_option("--side", o.side, "A or B");
  tower_cmd->add_option("--levels", o.levels, "Number of levels")->required();
  tower_cmd->add_flag("--oracle", o.oracle, "Cross-check every level by direct enumeration");
  auto* inv = app.add_subcommand("invariants", "K-theory and identification of a tower level");
  file_and_object(inv);
  inv->add_option("--side", o.side, "A or B");
  inv->add_option("--level", o.level, "Tower level")->required();
  auto* lift = app.add_subcommand("check-lifting", "Path lifting report");
  file_and_object(lift);
  auto* count = app.add_subcommand("count-lifts", "Count lifts of an H-path");
  file_and_object(count);
  count->add_option("--morphism", o.morphism, "p or q");
  count->add_option("--path", o.path, "Comma-separated H-edges");
  count->add_option("--mode", o.mode, "s (paths starting at a vertex) or r (ending)");
  count->add_option("--anchor", o.anchor, "H-vertex for an empty path");
  auto* rank2 = app.add_subcommand("rank2-check", "Commutation and unique factorization");
  file_and_object(rank2);
  auto* tile = app.add_subcommand("tile", "Tile a W x H rectangle");
  file_and_object(tile);
  tile->add_option("W", o.m, "Width")->required();
  tile->add_option("H", o.n, "Height")->required();
  tile->add_flag("--witness", o.witness, "Return one tiling");
  tile->add_flag("--all", o.all, "Return every tiling");
  auto* entropy = app.add_subcommand("entropy", "Block-growth table");
  file_and_object(entropy);
  entropy->add_option("--max-n", o.max_n, "Largest square side")->required();
  auto* example = app.add_subcommand("example", "Print a built-in example file");
  example->add_option("name", o.example, "Example name (omit to list)");
  example->add_flag("--emit", o.emit, "Print the raw file only");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Report rep;
  rep.command = args;
  const Budget budget{o.budget};
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (*example && o.emit) {
      auto text = o.example.empty() ? std::nullopt : example_text(o.example);
      if (!text) throw UsageError("--emit needs a built-in example name");
      out << *text;
      return 0;
    }
    if (*validate) outcome = cmd_validate(o, rep);
    else if (*dual_cmd) outcome = cmd_dual(o, rep);
    else if (*blocks) outcome = cmd_blocks(o, budget, rep);
    else if (*textile_cmd) outcome = cmd_textile_of(o, budget, rep);
    else if (*tower_cmd) outcome = cmd_tower(o, budget, rep);
    else if (*inv) outcome = cmd_invariants(o, budget, rep);
    else if (*lift) outcome = cmd_check_lifting(o, budget, rep);
    else if (*count) outcome = cmd_count_lifts(o, rep);
    else if (*rank2) outcome = cmd_rank2_check(o, rep);
    else if (*tile) outcome = cmd_tile(o, budget, rep);
    else if (*entropy) outcome = cmd_entropy(o, budget, rep);
    else if (*example) outcome = cmd_example(o, rep);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << '\n';
    return 1;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return 1;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.format == "json") {
    out << rep.to_json().dump(2) << '\n';
  } else {
    for (const auto& line : rep.text) out << line << '\n';
    for (const auto& n : rep.notes) out << "note: " << n << '\n';
  }
  return outcome.domain_failure ? 1 : 0;
}

}  // namespace weave::cli
