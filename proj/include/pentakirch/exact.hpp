#pragma once

#include <pentakirch/graph.hpp>
#include <pentakirch/matrix.hpp>
#include <pentakirch/numeric.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pentakirch {

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate division is exact. A zero pivot is replaced by a row
/// swap from below (flipping the sign); a column with no nonzero pivot
/// candidate means the matrix is singular.
inline BigInteger det_bareiss(DenseMatrix<BigInteger> m) {
  const std::size_t n = m.order();
  if (n == 0) return BigInteger(1);
  BigInteger previous(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return BigInteger(0);
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    const BigInteger& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInteger factor = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInteger& target = m(i, j);
        if (factor == 0) {
          if (target != 0) target = target * pivot / previous;
        } else {
          target = (target * pivot - factor * m(k, j)) / previous;
        }
      }
      m(i, k) = 0;
    }
    previous = pivot;
  }
  BigInteger det = m(n - 1, n - 1);
  return sign < 0 ? BigInteger(-det) : det;
}

/// Copy of m with one row and one (possibly different) column removed.
template <typename S>
DenseMatrix<S> minor_matrix(const DenseMatrix<S>& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.order();
  if (row >= n || col >= n) throw std::out_of_range("minor_matrix: index out of range");
  DenseMatrix<S> out(n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == col) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

/// Signed cofactor (-1)^{row+col} det(minor).
inline BigInteger cofactor(const DenseMatrix<BigInteger>& m, std::size_t row, std::size_t col) {
  BigInteger d = det_bareiss(minor_matrix(m, row, col));
  return (row + col) % 2 == 0 ? d : BigInteger(-d);
}

/// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence.
///
/// Works over any commutative ring S with exact division by small positive
/// integers (found through divide_by_integer). Returns ascending coefficients;
/// the x^order coefficient is 1.
template <typename S>
Polynomial<S> faddeev_leverrier(const DenseMatrix<S>& a) {
  const std::size_t n = a.order();
  // Row-wise nonzero pattern of A; the Laplacian-type inputs are sparse.
  std::vector<std::vector<std::pair<std::size_t, S>>> sparse(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(a(i, j))) sparse[i].emplace_back(j, a(i, j));

  std::vector<S> coeffs(n + 1, S(0));
  coeffs[n] = S(1);
  DenseMatrix<S> m(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{n-k+1} I
    DenseMatrix<S> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [col, value] : sparse[i]) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!is_zero(m(col, j))) next(i, j) += value * m(col, j);
        }
      }
      next(i, i) += coeffs[n - k + 1];
    }
    m = std::move(next);
    // c_{n-k} = -tr(A M_k) / k
    S trace(0);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [col, value] : sparse[i]) trace += value * m(col, i);
    coeffs[n - k] = -divide_by_integer(trace, static_cast<long>(k));
  }
  return Polynomial<S>{std::move(coeffs)};
}

inline DenseMatrix<BigRational> to_rational(const DenseMatrix<BigInteger>& m) {
  return m.map([](const BigInteger& x) { return BigRational(x); });
}

/// Exact det(xI - M) over the rationals.
inline Polynomial<BigRational> char_poly_rational(const DenseMatrix<BigRational>& m) {
  return faddeev_leverrier(m);
}

/// Matrix-Tree theorem: determinant of the Laplacian with one row and
/// column removed. Zero for a disconnected graph.
inline BigInteger spanning_tree_count(const Graph& g, std::size_t removed_vertex = 0) {
  if (g.vertex_count() == 0) return BigInteger(0);
  if (g.vertex_count() == 1) return BigInteger(1);
  return det_bareiss(laplacian<BigInteger>(g).without(removed_vertex));
}

/// Exact inverse by Gauss-Jordan elimination over the rationals.
/// Throws std::domain_error for a singular matrix.
inline DenseMatrix<BigRational> inverse_rational(const DenseMatrix<BigRational>& a) {
  const std::size_t n = a.order();
  DenseMatrix<BigRational> m = a;
  auto inv = DenseMatrix<BigRational>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("inverse_rational: matrix is singular");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    }
    const BigRational scale = 1 / m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) *= scale;
      inv(k, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const BigRational f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (m(k, j) != 0) m(i, j) -= f * m(k, j);
        if (inv(k, j) != 0) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

/// Exact effective resistances: ground vertex 0, invert the reduced
/// Laplacian G, then r_ij = G_ii + G_jj - 2 G_ij (with G padded by zeros).
/// Throws std::domain_error for a disconnected graph.
inline DenseMatrix<BigRational> resistance_exact(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DenseMatrix<BigRational> r(n);
  if (n < 2) return r;
  const auto reduced = inverse_rational(to_rational(laplacian<BigInteger>(g).without(0)));
  auto grounded = [&](std::size_t i, std::size_t j) -> BigRational {
    if (i == 0 || j == 0) return BigRational(0);
    return reduced(i - 1, j - 1);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      r(i, j) = grounded(i, i) + grounded(j, j) - 2 * grounded(i, j);
      r(j, i) = r(i, j);
    }
  return r;
}

/// Exact Kirchhoff index from the Laplacian characteristic polynomial:
/// with det(xI - L) = x q(x), the sum of reciprocal nonzero eigenvalues is
/// -q'(0)/q(0) = -c_2/c_1, so Kf = |V| * (-c_2 / c_1).
inline BigRational kirchhoff_exact(const Graph& g) {
  const auto p = char_poly_rational(to_rational(laplacian<BigInteger>(g)));
  const BigRational& c1 = coefficient(p, 1);
  if (c1 == 0) throw std::domain_error("graph is disconnected");
  return BigRational(static_cast<long>(g.vertex_count())) * (-coefficient(p, 2) / c1);
}

}  // namespace pentakirch
