#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weave/bigint.hpp"
#include "weave/error.hpp"
#include "weave/matrix.hpp"
#include "weave/shift2d.hpp"
#include "weave/smith.hpp"
#include "weave/tower.hpp"

namespace weave {

/// Z^free_rank + Z/t_1 + ... + Z/t_r with t_1 | t_2 | ... and every t_i > 1.
struct FPAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  bool trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2", "Z/7", "Z/2 + Z/4 + Z^3".
  std::string to_string() const;

  friend bool operator==(const FPAbelianGroup&, const FPAbelianGroup&) = default;
};

/// Z^rows / M Z^cols.
FPAbelianGroup cokernel(const ZMatrix& m);

/// Rank of the kernel of M acting on Z^cols.
std::size_t nullity(const ZMatrix& m);

/// BF(A) = Z^k / (I - A) Z^k.
FPAbelianGroup bowen_franks(const ZMatrix& a);
FPAbelianGroup bowen_franks(const IntMatrix& a);

struct KTheory {
  FPAbelianGroup k0;
  FPAbelianGroup k1;
};

/// K0 = coker(I - A^t), K1 = ker(I - A^t) (always free).
KTheory ck_k_theory(const IntMatrix& a);

struct SimplicityFlags {
  bool irreducible = false;
  bool permutation = false;
  bool simple_purely_infinite = false;
};

SimplicityFlags simplicity_flags(const IntMatrix& a);

struct AlgebraTag {
  enum class Kind { cuntz, cuntz_krieger, circle_matrix_sum };
  Kind kind = Kind::cuntz_krieger;
  std::size_t n = 0;                 // cuntz
  std::vector<std::size_t> cycles;   // circle_matrix_sum, ascending

  /// "cuntz(8)", "cuntz_krieger(generic)", "circle_matrix_sum(2,2)".
  std::string to_string() const;
};

struct AlgebraDescriptor {
  IntMatrix matrix;
  SimplicityFlags flags;
  KTheory k;
  AlgebraTag tag;
};

/// Identification from the matrix structure: all-ones N x N (N >= 2) gives the
/// Cuntz algebra O_N; a permutation matrix gives the direct sum over its cycles
/// of matrix algebras over C(T); anything else is reported generically.
/// Throws InvalidArgument on a zero row.
AlgebraDescriptor identify_algebra(const IntMatrix& a);

struct AlgebraReport {
  Side side = Side::A;
  std::size_t n = 1;
  /// "Abar(2,n)" for side A, "A(n,2)" for side B.
  std::string label;
  AlgebraDescriptor algebra;
  std::vector<std::size_t> k_sequence;
  /// simple_purely_infinite for levels 1..n.
  std::vector<bool> simple_by_level;
  std::vector<std::string> notes;
};

AlgebraReport algebra_report(const MatrixShift& x, Side side, std::size_t n, const Budget& budget = {});

}  // namespace weave
