#include "weave/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace weave {

std::string FPAbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (free_rank > 0) {
    os << (first ? "" : " + ") << "Z";
    if (free_rank > 1) os << '^' << free_rank;
  }
  return os.str();
}

FPAbelianGroup cokernel(const ZMatrix& m) {
  const auto snf = smith_normal_form(m);
  FPAbelianGroup g;
  std::size_t nonzero = 0;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = m.rows() - nonzero;
  return g;
}

std::size_t nullity(const ZMatrix& m) { return m.cols() - smith_normal_form(m).rank(); }

FPAbelianGroup bowen_franks(const ZMatrix& a) { return cokernel(identity_minus(a)); }

FPAbelianGroup bowen_franks(const IntMatrix& a) {
  if (!a.is_square()) throw InvalidArgument("bowen_franks: matrix is not square");
  return bowen_franks(ZMatrix(a));
}

KTheory ck_k_theory(const IntMatrix& a) {
  if (!a.is_square() || !a.is_binary()) throw InvalidArgument("ck_k_theory: expected a square 0/1 matrix");
  const auto m = identity_minus(ZMatrix(a), true);
  const auto snf = smith_normal_form(m);
  KTheory k;
  std::size_t nonzero = 0;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) k.k0.torsion.push_back(d);
  }
  k.k0.free_rank = m.rows() - nonzero;
  k.k1.free_rank = m.cols() - nonzero;
  return k;
}

SimplicityFlags simplicity_flags(const IntMatrix& a) {
  if (!a.is_square() || !a.is_binary()) throw InvalidArgument("simplicity_flags: expected a square 0/1 matrix");
  SimplicityFlags f;
  f.irreducible = is_irreducible(a);
  f.permutation = is_permutation(a);
  f.simple_purely_infinite = f.irreducible && !f.permutation;
  return f;
}

std::string AlgebraTag::to_string() const {
  switch (kind) {
    case Kind::cuntz:
      return "cuntz(" + std::to_string(n) + ")";
    case Kind::circle_matrix_sum: {
      std::string s = "circle_matrix_sum(";
      for (std::size_t i = 0; i < cycles.size(); ++i) s += (i ? "," : "") + std::to_string(cycles[i]);
      return s + ")";
    }
    case Kind::cuntz_krieger:
      break;
  }
  return "cuntz_krieger(generic)";
}

AlgebraDescriptor identify_algebra(const IntMatrix& a) {
  if (!a.is_square() || !a.is_binary()) throw InvalidArgument("identify_algebra: expected a square 0/1 matrix");
  if (has_zero_row(a)) throw InvalidArgument("identify_algebra: matrix has a zero row (sink)");
  AlgebraDescriptor d;
  d.matrix = a;
  d.flags = simplicity_flags(a);
  d.k = ck_k_theory(a);
  if (a.rows() >= 2 && a == IntMatrix::all_ones(a.rows())) {
    d.tag.kind = AlgebraTag::Kind::cuntz;
    d.tag.n = a.rows();
  } else if (d.flags.permutation) {
    d.tag.kind = AlgebraTag::Kind::circle_matrix_sum;
    d.tag.cycles = permutation_cycle_lengths(a);
    std::sort(d.tag.cycles.begin(), d.tag.cycles.end());
  }
  return d;
}

AlgebraReport algebra_report(const MatrixShift& x, Side side, std::size_t n, const Budget& budget) {
  const auto tw = tower(x, side, n, budget);
  AlgebraReport rep;
  rep.side = side;
  rep.n = n;
  rep.label = side == Side::A ? "Abar(2," + std::to_string(n) + ")" : "A(" + std::to_string(n) + ",2)";
  rep.algebra = identify_algebra(tw.levels.back().matrix);
  rep.k_sequence = tw.k_sequence();
  rep.notes = tw.warnings;
  for (const auto& lvl : tw.levels) rep.simple_by_level.push_back(simplicity_flags(lvl.matrix).simple_purely_infinite);

  const auto& tag = rep.algebra.tag;
  if (tag.kind == AlgebraTag::Kind::circle_matrix_sum && tag.cycles.size() > 1) {
    std::ostringstream os;
    os << "level matrix is a permutation with " << tag.cycles.size()
       << " cycles: the algebra is a direct sum of " << tag.cycles.size()
       << " circle-matrix algebras (K0 = " << rep.algebra.k.k0.to_string() << "), not C(T) (x) M_"
       << rep.algebra.matrix.rows() << " (which would need a single cycle)";
    rep.notes.push_back(os.str());
  }
  const bool all_simple =
      std::all_of(rep.simple_by_level.begin(), rep.simple_by_level.end(), [](bool b) { return b; });
  rep.notes.push_back(std::string("simple purely infinite at every level 1..") + std::to_string(n) + ": " +
                      (all_simple ? "yes" : "no") + " (evidence only; strong mixing is not decided)");
  return rep;
}

}  // namespace weave
