#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weave/bigint.hpp"
#include "weave/graph.hpp"

namespace weave {

/// Two graphs and two morphisms p,q : G -> H such that (p(e), q(e), r(e), s(e))
/// determines the edge e of G.
struct TextileSystem {
  std::string name;
  GraphPtr g;
  GraphPtr h;
  GraphMorphism p;
  GraphMorphism q;
};

struct TextileReport {
  MorphismReport p;
  MorphismReport q;
  /// p and q both have domain g and codomain h.
  bool wiring_ok = true;
  /// Pairs of distinct G-edges with identical (p, q, r, s) images.
  std::vector<std::pair<std::size_t, std::size_t>> collisions;

  bool determinate() const noexcept { return collisions.empty(); }
  bool valid() const noexcept {
    return wiring_ok && p.valid() && q.valid() && p.surjective() && q.surjective() && determinate();
  }
};

TextileReport validate_textile(const TextileSystem& t);

/// Human-readable diagnosis of every failure in a report; empty when valid.
std::vector<std::string> describe_failures(const TextileSystem& t, const TextileReport& rep);

/// Throws ValidationError with the full diagnosis unless t is valid.
void require_valid(const TextileSystem& t);

/// The dual textile: G-bar has vertices H^1 and edges G^1 with source p and
/// range q; H-bar has vertices H^0 and edges G^0; s and r become the morphisms.
TextileSystem dual(const TextileSystem& t);

struct WangTile {
  std::string edge;
  std::string left;    // p(e)
  std::string right;   // q(e)
  std::string bottom;  // s(e)
  std::string top;     // r(e)

  friend bool operator==(const WangTile&, const WangTile&) = default;
};

std::vector<WangTile> wang_tiles(const TextileSystem& t);

enum class LiftMode { source, range };

/// A (vertex, H-edge) pair where lifting has no solution (count 0) or more
/// than one (count > 1).
struct LiftWitness {
  LiftMode mode = LiftMode::source;
  std::string vertex;
  std::string h_edge;
  std::size_t count = 0;

  friend bool operator==(const LiftWitness&, const LiftWitness&) = default;
};

struct LiftCheck {
  bool s_exists = true;
  bool s_unique = true;
  bool r_exists = true;
  bool r_unique = true;
  /// Sorted by (mode, vertex, h_edge).
  std::vector<LiftWitness> witnesses;

  bool fibration() const noexcept { return s_exists && r_exists; }
  bool covering() const noexcept { return fibration() && s_unique && r_unique; }

  friend bool operator==(const LiftCheck&, const LiftCheck&) = default;
};

struct LiftReport {
  LiftCheck p;
  LiftCheck q;

  friend bool operator==(const LiftReport&, const LiftReport&) = default;
};

/// Path lifting for s and r, evaluated vertex-by-edge.
LiftCheck lift_check(const GraphMorphism& phi);
LiftReport lifting_report(const TextileSystem& t);

/// Canonical ordering applied to witness lists before comparison.
void sort_witnesses(std::vector<LiftWitness>& w);

struct LiftCount {
  /// (G-vertex index, number of lifts) for every vertex over the path's
  /// start (mode s) or end (mode r) vertex, in declaration order.
  std::vector<std::pair<std::size_t, BigInt>> per_vertex;
  BigInt total;
};

/// Number of G-paths starting (mode s) or ending (mode r) at each vertex that
/// map onto the given H-path. For an empty path the anchor H-vertex must be
/// given; otherwise it is optional and checked against the path.
LiftCount count_lifts(const GraphMorphism& phi, const std::vector<std::size_t>& h_path, LiftMode mode,
                      std::optional<std::size_t> anchor = std::nullopt);

struct TextileIsomorphism {
  std::vector<std::size_t> g_vertex;
  std::vector<std::size_t> g_edge;
  std::vector<std::size_t> h_vertex;
  std::vector<std::size_t> h_edge;

  friend bool operator==(const TextileIsomorphism&, const TextileIsomorphism&) = default;
};

/// Backtracking search for graph isomorphisms G1~G2, H1~H2 commuting with p
/// and q. Returns the lexicographically least one (maps compared in
/// declaration order of t1). Both textiles must be valid; throws
/// BudgetExceeded if |G^0|+|G^1| exceeds max_size.
std::optional<TextileIsomorphism> are_isomorphic(const TextileSystem& t1, const TextileSystem& t2,
                                                 std::size_t max_size = 24);

}  // namespace weave
