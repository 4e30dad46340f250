#include "weave/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

#include "weave/error.hpp"

namespace weave {

ZMatrix::ZMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ZMatrix: ragged rows");
    for (long long v : r) data_.emplace_back(v);
  }
}

ZMatrix::ZMatrix(const IntMatrix& m) : ZMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void ZMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void ZMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void ZMatrix::add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if (const auto& x = (*this)(src, j); x != 0) (*this)(dst, j) += factor * x;
}

void ZMatrix::add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if (const auto& x = (*this)(i, src); x != 0) (*this)(i, dst) += factor * x;
}

void ZMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

ZMatrix multiply(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("multiply: dimension mismatch");
  ZMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ZMatrix transpose(const ZMatrix& m) {
  ZMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

BigInt determinant(const ZMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ZMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

ZMatrix identity_minus(const ZMatrix& a, bool transposed) {
  if (a.rows() != a.cols()) throw InvalidArgument("identity_minus: matrix is not square");
  ZMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = (i == j ? 1 : 0) - (transposed ? a(j, i) : a(i, j));
  return out;
}

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> diag;
  for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i) diag.push_back(d(i, i));
  return diag;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& x : diagonal()) r += x != 0;
  return r;
}

namespace {

// Above this size the product and unimodularity checks switch from exact
// cubic-cost arithmetic to randomized exact products and modular determinants.
constexpr std::size_t kExactVerifyLimit = 48;

std::vector<BigInt> mat_vec(const ZMatrix& m, const std::vector<BigInt>& x) {
  std::vector<BigInt> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (const auto& a = m(i, j); a != 0 && x[j] != 0) y[i] += a * x[j];
  return y;
}

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

std::uint64_t determinant_mod(const ZMatrix& m, std::uint64_t p) {
  const auto n = m.rows();
  std::vector<std::uint64_t> a(n * n);
  const BigInt bp = p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt r = m(i, j) % bp;
      if (r < 0) r += bp;
      a[i * n + j] = static_cast<std::uint64_t>(r);
    }
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = (p - det) % p;
    }
    det = mul_mod(det, a[k * n + k], p);
    const auto inv = pow_mod(a[k * n + k], p - 2, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const auto f = mul_mod(a[i * n + k], inv, p);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] = (a[i * n + j] + p - mul_mod(f, a[k * n + j], p)) % p;
    }
  }
  return det;
}

void verify_large(const ZMatrix& m, const SmithDecomposition& s) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::int64_t> dist(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<BigInt> x(s.v.cols());
    for (auto& v : x) v = dist(rng);
    if (mat_vec(s.u, mat_vec(m, mat_vec(s.v, x))) != mat_vec(s.d, x))
      throw std::logic_error("smith_normal_form: U*M*V != D");
  }
  for (const std::uint64_t p : {2305843009213693951ULL, 4611686018427387847ULL, 9223372036854775783ULL})
    for (const auto* x : {&s.u, &s.v}) {
      const auto det = determinant_mod(*x, p);
      if (det != 1 && det != p - 1) throw std::logic_error("smith_normal_form: transform is not unimodular");
    }
}

void verify(const ZMatrix& m, const SmithDecomposition& s) {
  if (std::max(m.rows(), m.cols()) > kExactVerifyLimit) {
    verify_large(m, s);
  } else {
    if (!(multiply(multiply(s.u, m), s.v) == s.d)) throw std::logic_error("smith_normal_form: U*M*V != D");
    for (const auto* x : {&s.u, &s.v}) {
      const auto det = determinant(*x);
      if (det != 1 && det != -1) throw std::logic_error("smith_normal_form: transform is not unimodular");
    }
  }
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j && s.d(i, j) != 0) throw std::logic_error("smith_normal_form: D is not diagonal");
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) throw std::logic_error("smith_normal_form: negative invariant factor");
    if (i + 1 < diag.size()) {
      if (diag[i] == 0 ? diag[i + 1] != 0 : diag[i + 1] % diag[i] != 0)
        throw std::logic_error("smith_normal_form: divisibility chain broken");
    }
  }
}

}  // namespace

SmithDecomposition smith_normal_form(const ZMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithDecomposition s{ZMatrix::identity(rows), m, ZMatrix::identity(cols)};
  auto& d = s.d;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    bool any = true;
    while (true) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      std::size_t pi = rows, pj = cols;
      BigInt best;
      for (std::size_t i = t; i < rows && best != 1; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const auto& x = d(i, j);
          if (x == 0) continue;
          const bool smaller = pi == rows || (x.sign() < 0 ? -x < best : x < best);
          if (!smaller) continue;
          pi = i;
          pj = j;
          best = x.sign() < 0 ? BigInt(-x) : x;
          if (best == 1) break;
        }
      if (pi == rows) {
        any = false;
        break;
      }
      d.swap_rows(t, pi);
      s.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.v.swap_cols(t, pj);

      bool residue = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const BigInt q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        s.u.add_row(i, t, -q);
        residue = residue || d(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const BigInt q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        s.v.add_col(j, t, -q);
        residue = residue || d(t, j) != 0;
      }
      if (residue) continue;

      std::size_t bad = rows;
      const bool unit = d(t, t) == 1 || d(t, t) == -1;
      for (std::size_t i = t + 1; i < rows && bad == rows && !unit; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      d.add_row(t, bad, 1);
      s.u.add_row(t, bad, 1);
    }
    if (!any) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  verify(m, s);
  return s;
}

}  // namespace weave
