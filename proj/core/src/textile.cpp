#include "weave/textile.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "weave/error.hpp"

namespace weave {

TextileReport validate_textile(const TextileSystem& t) {
  if (!t.g || !t.h) throw InvalidArgument("textile " + t.name + ": missing graph");
  TextileReport rep;
  rep.wiring_ok = t.p.domain && t.q.domain && t.p.codomain && t.q.codomain &&
                  t.p.domain->same_structure(*t.g) && t.q.domain->same_structure(*t.g) &&
                  t.p.codomain->same_structure(*t.h) && t.q.codomain->same_structure(*t.h);
  rep.p = validate_morphism(t.p);
  rep.q = validate_morphism(t.q);
  if (!rep.p.total || !rep.q.total || !rep.wiring_ok) return rep;

  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
  std::map<Key, std::size_t> seen;
  for (std::size_t e = 0; e < t.g->edge_count(); ++e) {
    const Key key{t.p.edge_map[e], t.q.edge_map[e], t.g->edge(e).range, t.g->edge(e).source};
    auto [it, inserted] = seen.emplace(key, e);
    if (!inserted) rep.collisions.emplace_back(it->second, e);
  }
  return rep;
}

namespace {

void describe_morphism(const char* label, const GraphMorphism& f, const MorphismReport& r,
                       std::vector<std::string>& out) {
  if (!r.total) {
    out.push_back(std::string(label) + ": map is not total on the domain graph");
    return;
  }
  for (auto e : r.source_failures)
    out.push_back(std::string(label) + ": does not commute with s at edge '" + f.domain->edge(e).name + "'");
  for (auto e : r.range_failures)
    out.push_back(std::string(label) + ": does not commute with r at edge '" + f.domain->edge(e).name + "'");
  if (!r.vertex_surjective) out.push_back(std::string(label) + ": not surjective on vertices");
  if (!r.edge_surjective) out.push_back(std::string(label) + ": not surjective on edges");
}

}  // namespace

std::vector<std::string> describe_failures(const TextileSystem& t, const TextileReport& rep) {
  std::vector<std::string> out;
  if (!rep.wiring_ok) out.push_back("p and q must both map " + t.g->name() + " to " + t.h->name());
  describe_morphism("p", t.p, rep.p, out);
  describe_morphism("q", t.q, rep.q, out);
  for (auto [a, b] : rep.collisions)
    out.push_back("determinacy fails: edges '" + t.g->edge(a).name + "' and '" + t.g->edge(b).name +
                  "' have the same (p, q, r, s)");
  return out;
}

void require_valid(const TextileSystem& t) {
  const auto rep = validate_textile(t);
  if (rep.valid()) return;
  std::ostringstream msg;
  msg << "textile " << t.name << " is invalid:";
  for (const auto& line : describe_failures(t, rep)) msg << "\n  " << line;
  throw ValidationError(msg.str());
}

TextileSystem dual(const TextileSystem& t) {
  require_valid(t);
  const auto& g = *t.g;
  const auto& h = *t.h;

  auto gbar = std::make_shared<DirectedGraph>(t.name + ".dual.G");
  for (const auto& b : h.edges()) gbar->add_vertex(b.name);
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    gbar->add_edge(g.edge(e).name, t.p.edge_map[e], t.q.edge_map[e]);

  auto hbar = std::make_shared<DirectedGraph>(t.name + ".dual.H");
  for (const auto& w : h.vertices()) hbar->add_vertex(w);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    hbar->add_edge(g.vertex(v), t.p.vertex_map[v], t.q.vertex_map[v]);

  TextileSystem d;
  d.name = t.name + ".dual";
  d.g = gbar;
  d.h = hbar;
  d.p = GraphMorphism{d.name + ".p", gbar, hbar, {}, {}};
  d.q = GraphMorphism{d.name + ".q", gbar, hbar, {}, {}};
  for (const auto& b : h.edges()) {
    d.p.vertex_map.push_back(b.source);
    d.q.vertex_map.push_back(b.range);
  }
  for (const auto& e : g.edges()) {
    d.p.edge_map.push_back(e.source);
    d.q.edge_map.push_back(e.range);
  }
  return d;
}

std::vector<WangTile> wang_tiles(const TextileSystem& t) {
  std::vector<WangTile> tiles;
  tiles.reserve(t.g->edge_count());
  for (std::size_t e = 0; e < t.g->edge_count(); ++e) {
    const auto& edge = t.g->edge(e);
    tiles.push_back(WangTile{edge.name, t.h->edge(t.p.edge_map[e]).name, t.h->edge(t.q.edge_map[e]).name,
                             t.g->vertex(edge.source), t.g->vertex(edge.range)});
  }
  return tiles;
}

void sort_witnesses(std::vector<LiftWitness>& w) {
  std::sort(w.begin(), w.end(), [](const LiftWitness& a, const LiftWitness& b) {
    return std::tie(a.mode, a.vertex, a.h_edge) < std::tie(b.mode, b.vertex, b.h_edge);
  });
}

LiftCheck lift_check(const GraphMorphism& phi) {
  const auto mrep = validate_morphism(phi);
  if (!mrep.valid()) throw ValidationError("morphism " + phi.name + " is not a graph morphism");
  const auto& g = *phi.domain;
  const auto& h = *phi.codomain;
  LiftCheck out;

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto w = phi.vertex_map[v];
    for (std::size_t b = 0; b < h.edge_count(); ++b) {
      for (LiftMode mode : {LiftMode::source, LiftMode::range}) {
        const bool anchored = mode == LiftMode::source ? h.edge(b).source == w : h.edge(b).range == w;
        if (!anchored) continue;
        std::size_t count = 0;
        for (std::size_t a = 0; a < g.edge_count(); ++a) {
          const auto end = mode == LiftMode::source ? g.edge(a).source : g.edge(a).range;
          if (end == v && phi.edge_map[a] == b) ++count;
        }
        if (count == 1) continue;
        auto& exists = mode == LiftMode::source ? out.s_exists : out.r_exists;
        auto& unique = mode == LiftMode::source ? out.s_unique : out.r_unique;
        if (count == 0) exists = false;
        unique = false;
        out.witnesses.push_back(LiftWitness{mode, g.vertex(v), h.edge(b).name, count});
      }
    }
  }
  sort_witnesses(out.witnesses);
  return out;
}

LiftReport lifting_report(const TextileSystem& t) { return LiftReport{lift_check(t.p), lift_check(t.q)}; }

LiftCount count_lifts(const GraphMorphism& phi, const std::vector<std::size_t>& h_path, LiftMode mode,
                      std::optional<std::size_t> anchor) {
  if (!validate_morphism(phi).valid()) throw ValidationError("morphism " + phi.name + " is not a graph morphism");
  const auto& g = *phi.domain;
  const auto& h = *phi.codomain;
  for (auto b : h_path)
    if (b >= h.edge_count()) throw InvalidArgument("count_lifts: edge index out of range");
  for (std::size_t i = 1; i < h_path.size(); ++i)
    if (h.edge(h_path[i - 1]).range != h.edge(h_path[i]).source)
      throw InvalidArgument("count_lifts: path is not composable at position " + std::to_string(i) + " ('" +
                            h.edge(h_path[i - 1]).name + "' then '" + h.edge(h_path[i]).name + "')");

  std::size_t w;
  if (h_path.empty()) {
    if (!anchor) throw InvalidArgument("count_lifts: an empty path needs an anchor vertex");
    w = *anchor;
  } else {
    w = mode == LiftMode::source ? h.edge(h_path.front()).source : h.edge(h_path.back()).range;
    if (anchor && *anchor != w) throw InvalidArgument("count_lifts: anchor vertex does not match the path");
  }

  // Per-edge transfer: lifts of H-edge b form a 0/1-weighted G-vertex relation.
  std::vector<std::vector<std::size_t>> lifts(h.edge_count());
  for (std::size_t a = 0; a < g.edge_count(); ++a) lifts[phi.edge_map[a]].push_back(a);

  LiftCount result;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (phi.vertex_map[v] != w) continue;
    std::vector<BigInt> cur(g.vertex_count(), 0);
    cur[v] = 1;
    if (mode == LiftMode::source) {
      for (auto b : h_path) {
        std::vector<BigInt> next(g.vertex_count(), 0);
        for (auto a : lifts[b]) next[g.edge(a).range] += cur[g.edge(a).source];
        cur = std::move(next);
      }
    } else {
      for (auto it = h_path.rbegin(); it != h_path.rend(); ++it) {
        std::vector<BigInt> prev(g.vertex_count(), 0);
        for (auto a : lifts[*it]) prev[g.edge(a).source] += cur[g.edge(a).range];
        cur = std::move(prev);
      }
    }
    BigInt n = 0;
    for (const auto& c : cur) n += c;
    result.total += n;
    result.per_vertex.emplace_back(v, std::move(n));
  }
  return result;
}

namespace {

/// Partial bijection with an undo trail.
class PartialMap {
 public:
  PartialMap(std::size_t n, std::size_t m) : fwd_(n, npos), used_(m, false) {}

  bool force(std::size_t x, std::size_t y, std::vector<std::size_t>& trail) {
    if (fwd_[x] != npos) return fwd_[x] == y;
    if (used_[y]) return false;
    fwd_[x] = y;
    used_[y] = true;
    trail.push_back(x);
    return true;
  }
  void undo(std::vector<std::size_t>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      used_[fwd_[trail.back()]] = false;
      fwd_[trail.back()] = npos;
      trail.pop_back();
    }
  }
  bool is_used(std::size_t y) const { return used_[y]; }
  std::size_t at(std::size_t x) const { return fwd_[x]; }
  const std::vector<std::size_t>& map() const { return fwd_; }
  bool total() const { return std::find(fwd_.begin(), fwd_.end(), npos) == fwd_.end(); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::size_t> fwd_;
  std::vector<bool> used_;
};

struct DegreeSig {
  std::size_t out = 0, in = 0, loops = 0;
  friend bool operator==(const DegreeSig&, const DegreeSig&) = default;
};

std::vector<DegreeSig> degree_signatures(const DirectedGraph& g) {
  std::vector<DegreeSig> sig(g.vertex_count());
  for (const auto& e : g.edges()) {
    ++sig[e.source].out;
    ++sig[e.range].in;
    if (e.source == e.range) ++sig[e.source].loops;
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const TextileSystem& a, const TextileSystem& b)
      : a_(a),
        b_(b),
        gv_(a.g->vertex_count(), b.g->vertex_count()),
        ge_(a.g->edge_count(), b.g->edge_count()),
        hv_(a.h->vertex_count(), b.h->vertex_count()),
        he_(a.h->edge_count(), b.h->edge_count()),
        sig_a_(degree_signatures(*a.g)),
        sig_b_(degree_signatures(*b.g)) {}

  std::optional<TextileIsomorphism> run() {
    if (assign_vertex(0)) return TextileIsomorphism{gv_.map(), ge_.map(), hv_.map(), he_.map()};
    return std::nullopt;
  }

 private:
  bool assign_vertex(std::size_t v) {
    if (v == a_.g->vertex_count()) return assign_edge(0);
    for (std::size_t w = 0; w < b_.g->vertex_count(); ++w) {
      if (gv_.is_used(w) || !(sig_a_[v] == sig_b_[w])) continue;
      const auto mg = trail_g_.size(), mh = trail_hv_.size();
      if (gv_.force(v, w, trail_g_) && hv_.force(a_.p.vertex_map[v], b_.p.vertex_map[w], trail_hv_) &&
          hv_.force(a_.q.vertex_map[v], b_.q.vertex_map[w], trail_hv_) && assign_vertex(v + 1))
        return true;
      gv_.undo(trail_g_, mg);
      hv_.undo(trail_hv_, mh);
    }
    return false;
  }

  bool assign_edge(std::size_t e) {
    if (e == a_.g->edge_count()) return finish();
    const auto& ea = a_.g->edge(e);
    for (std::size_t f = 0; f < b_.g->edge_count(); ++f) {
      const auto& fb = b_.g->edge(f);
      if (ge_.is_used(f) || fb.source != gv_.at(ea.source) || fb.range != gv_.at(ea.range)) continue;
      const auto mg = trail_ge_.size(), mh = trail_he_.size();
      if (ge_.force(e, f, trail_ge_) && he_.force(a_.p.edge_map[e], b_.p.edge_map[f], trail_he_) &&
          he_.force(a_.q.edge_map[e], b_.q.edge_map[f], trail_he_) && assign_edge(e + 1))
        return true;
      ge_.undo(trail_ge_, mg);
      he_.undo(trail_he_, mh);
    }
    return false;
  }

  bool finish() const {
    if (!hv_.total() || !he_.total()) return false;
    for (std::size_t b = 0; b < a_.h->edge_count(); ++b) {
      const auto& eb = a_.h->edge(b);
      const auto& img = b_.h->edge(he_.at(b));
      if (img.source != hv_.at(eb.source) || img.range != hv_.at(eb.range)) return false;
    }
    return true;
  }

  const TextileSystem& a_;
  const TextileSystem& b_;
  PartialMap gv_, ge_, hv_, he_;
  std::vector<std::size_t> trail_g_, trail_ge_, trail_hv_, trail_he_;
  std::vector<DegreeSig> sig_a_, sig_b_;
};

}  // namespace

std::optional<TextileIsomorphism> are_isomorphic(const TextileSystem& t1, const TextileSystem& t2,
                                                 std::size_t max_size) {
  for (const auto* t : {&t1, &t2}) {
    if (t->g->vertex_count() + t->g->edge_count() > max_size)
      throw BudgetExceeded("are_isomorphic: textile " + t->name + " exceeds the search bound of " +
                           std::to_string(max_size));
    require_valid(*t);
  }
  if (t1.g->vertex_count() != t2.g->vertex_count() || t1.g->edge_count() != t2.g->edge_count() ||
      t1.h->vertex_count() != t2.h->vertex_count() || t1.h->edge_count() != t2.h->edge_count())
    return std::nullopt;
  return IsoSearch(t1, t2).run();
}

}  // namespace weave
