#pragma once

#include <pentakirch/closed_forms.hpp>
#include <pentakirch/exact.hpp>
#include <pentakirch/graph.hpp>
#include <pentakirch/matrix.hpp>
#include <pentakirch/numeric.hpp>
#include <pentakirch/surd.hpp>

#include <algorithm>
#include <sstream>
#include <string>

namespace pentakirch {

// The rail swap Upper(j) <-> Lower(j) fixing every Middle(k) is an
// automorphism of both chain families. Ordering the vertices as
// V0 = middles, V1 = uppers, V2 = lowers splits the Laplacian spectrum into
//   L_A = [[L00, sqrt2 L01], [sqrt2 L10, L11 + L12]]   (order 3n)
//   L_S = L11 - L12                                    (order 2n)

/// Band matrix of order 2n: diagonal 4,3,4,3,..., off-diagonal -1.
inline DenseMatrix<BigInteger> band_block(int n) {
  require_chain_length(n);
  const std::size_t m = static_cast<std::size_t>(2 * n);
  DenseMatrix<BigInteger> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    b(i, i) = i % 2 == 0 ? 4 : 3;
    if (i + 1 < m) b(i, i + 1) = b(i + 1, i) = -1;
  }
  return b;
}

/// Tridiagonal matrix with -2 on the diagonal and 1 beside it; det = (-1)^n (1 + n).
inline DenseMatrix<BigInteger> tridiagonal_r(int order) {
  if (order < 1) throw std::domain_error("tridiagonal_r: order must be >= 1");
  const auto m = static_cast<std::size_t>(order);
  DenseMatrix<BigInteger> r(m);
  for (std::size_t i = 0; i < m; ++i) {
    r(i, i) = -2;
    if (i + 1 < m) r(i, i + 1) = r(i + 1, i) = 1;
  }
  return r;
}

/// tridiagonal_r with -3 at the 1-based diagonal position `marked`;
/// det = (-1)^n (1 + n + m + mn - m^2).
inline DenseMatrix<BigInteger> tridiagonal_r_marked(int order, int marked) {
  if (marked < 1 || marked > order) throw std::domain_error("tridiagonal_r_marked: position outside [1, order]");
  auto r = tridiagonal_r(order);
  const auto k = static_cast<std::size_t>(marked - 1);
  r(k, k) = -3;
  return r;
}

struct DecomposedPair {
  int n = 2;
  Variant variant = Variant::Cylinder;
  DenseMatrix<SurdValue> l_a;  // order 3n, same for both variants
  DenseMatrix<BigInteger> l_s;  // order 2n
};

/// The two reduced blocks for P_n or P'_n.
///
/// L_S is the band block with a symmetric corner correction at (1,2n) and
/// (2n,1): -1 for the cylinder, +1 for the Moebius chain. Contributions are
/// summed, so overlapping positions would accumulate.
inline DecomposedPair build_decomposition(int n, Variant variant) {
  require_chain_length(n);
  const auto un = static_cast<std::size_t>(n);
  DecomposedPair out{n, variant, DenseMatrix<SurdValue>(3 * un), band_block(n)};

  const BigInteger corner = variant == Variant::Cylinder ? -1 : 1;
  out.l_s(0, 2 * un - 1) += corner;
  out.l_s(2 * un - 1, 0) += corner;

  auto& a = out.l_a;
  for (std::size_t k = 0; k < un; ++k) {
    a(k, k) = 2;
    // Middle(k+1) couples to Upper(2k+2), which sits at n + 2k + 1.
    const std::size_t spoke = un + 2 * k + 1;
    a(k, spoke) -= SurdValue::sqrt2();
    a(spoke, k) -= SurdValue::sqrt2();
  }
  for (std::size_t j = 0; j < 2 * un; ++j) {
    const std::size_t p = un + j;
    a(p, p) += j % 2 == 0 ? 2 : 3;
    const std::size_t q = un + (j + 1) % (2 * un);
    a(p, q) -= 1;
    a(q, p) -= 1;
  }
  if (!out.l_a.is_symmetric() || !out.l_s.is_symmetric()) {
    throw ConsistencyError("decomposition blocks are not symmetric");
  }
  return out;
}

/// The same blocks read off the actual graph Laplacian through the rail swap.
inline DecomposedPair decomposition_from_graph(const Graph& g) {
  if (!g.family()) throw std::invalid_argument("decomposition_from_graph: graph is not a chain family member");
  const GraphFamily f = *g.family();
  const auto n = static_cast<std::size_t>(f.n);
  const auto l = laplacian<BigInteger>(g);
  auto mid = [&](std::size_t k) { return vertex_id(middle(static_cast<int>(k + 1)), f.n); };
  auto up = [&](std::size_t j) { return vertex_id(upper(static_cast<int>(j + 1)), f.n); };
  auto low = [&](std::size_t j) { return vertex_id(lower(static_cast<int>(j + 1)), f.n); };

  DecomposedPair out{f.n, f.variant, DenseMatrix<SurdValue>(3 * n), DenseMatrix<BigInteger>(2 * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.l_a(i, j) = SurdValue(BigRational(l(mid(i), mid(j))));
    for (std::size_t j = 0; j < 2 * n; ++j) {
      const SurdValue coupling = SurdValue::sqrt2() * SurdValue(BigRational(l(mid(i), up(j))));
      out.l_a(i, n + j) = coupling;
      out.l_a(n + j, i) = coupling;
    }
  }
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      out.l_a(n + i, n + j) = SurdValue(BigRational(l(up(i), up(j)) + l(up(i), low(j))));
      out.l_s(i, j) = l(up(i), up(j)) - l(up(i), low(j));
    }
  return out;
}

/// det(xI - M) over Q(sqrt2, sqrt3). Every coefficient must be rational;
/// the rational parts are returned.
inline Polynomial<BigRational> char_poly_surd(const DenseMatrix<SurdValue>& m) {
  const Polynomial<SurdValue> p = faddeev_leverrier(m);
  Polynomial<BigRational> out;
  out.coeffs.reserve(p.coeffs.size());
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (!p.coeffs[k].is_rational()) {
      throw ConsistencyError("characteristic polynomial coefficient of x^" + std::to_string(k) +
                             " has an irrational part: " + p.coeffs[k].str());
    }
    out.coeffs.push_back(p.coeffs[k].rational_part());
  }
  return out;
}

/// Low-order characteristic-polynomial coefficients of the two blocks.
///
/// alpha_{3n-1} and alpha_{3n-2} are the x^1 and x^2 coefficients of
/// det(xI - L_A) as they stand. beta_2n_minus_1 is the positive elementary
/// symmetric sum e_{2n-1}(L_S), i.e. minus the x^1 coefficient of
/// det(xI - L_S), so that sum 1/mu = beta / det(L_S).
struct VietaCoefficients {
  BigInteger alpha_3n_minus_1;
  BigInteger alpha_3n_minus_2;
  BigInteger beta_2n_minus_1;
  BigInteger det_ls;
};

inline VietaCoefficients extract_vieta(const DecomposedPair& pair) {
  const auto pa = char_poly_surd(pair.l_a);
  const auto ps = char_poly_rational(to_rational(pair.l_s));
  if (coefficient(pa, 0) != 0) throw ConsistencyError("L_A is expected to be singular");
  VietaCoefficients v{to_integer(coefficient(pa, 1), "alpha_{3n-1}"),
                      to_integer(coefficient(pa, 2), "alpha_{3n-2}"),
                      to_integer(-coefficient(ps, 1), "beta_{2n-1}"), det_bareiss(pair.l_s)};
  if (v.alpha_3n_minus_1 == 0) throw ConsistencyError("alpha_{3n-1} vanished");
  if (v.det_ls <= 0) throw ConsistencyError("det(L_S) is not positive: " + v.det_ls.str());
  return v;
}

struct FormulaCheck {
  bool ok = false;
  std::string detail;
};

/// alpha_{3n-1} = (-1)^{n+1} 2^n 5n^2 and -alpha_{3n-2}/alpha_{3n-1} = (25n^2+30n-13)/60.
inline FormulaCheck verify_alpha_formulas(int n) {
  const auto v = extract_vieta(build_decomposition(n, Variant::Cylinder));
  const BigInteger expected_alpha = alpha_3n_minus_1_closed(n);
  const BigRational ratio = BigRational(-v.alpha_3n_minus_2) / BigRational(v.alpha_3n_minus_1);
  const BigRational expected_ratio = alpha_ratio_closed(n);
  std::ostringstream msg;
  msg << "n=" << n << " alpha_{3n-1}=" << v.alpha_3n_minus_1 << " (formula " << expected_alpha << ")"
      << " -alpha_{3n-2}/alpha_{3n-1}=" << ratio << " (formula " << expected_ratio << ")";
  return {v.alpha_3n_minus_1 == expected_alpha && ratio == expected_ratio, msg.str()};
}

struct BetaCheck {
  bool ok = false;
  BigInteger closed_form;
  BigInteger convolution;
  BigInteger char_poly;
  BigInteger det_ls;
  BigInteger det_closed;
  std::string detail;
};

/// Three routes to beta_{2n-1} (surd closed form, r/r' generating functions,
/// characteristic polynomial) plus det(L_S) against t_n -+ 2.
inline BetaCheck verify_beta_formula(int n, Variant variant) {
  const auto v = extract_vieta(build_decomposition(n, variant));
  BetaCheck c;
  c.closed_form = beta_closed_form(n);
  c.convolution = beta_by_convolution(n);
  c.char_poly = v.beta_2n_minus_1;
  c.det_ls = v.det_ls;
  c.det_closed = antisymmetric_det_closed({variant, n});
  c.ok = c.closed_form == c.char_poly && c.convolution == c.char_poly && c.det_ls == c.det_closed;
  std::ostringstream msg;
  msg << "n=" << n << " " << to_string(variant) << " beta: closed=" << c.closed_form
      << " convolution=" << c.convolution << " char-poly=" << c.char_poly << "; det(L_S)=" << c.det_ls
      << " (t_n" << (variant == Variant::Cylinder ? "-2" : "+2") << "=" << c.det_closed << ")";
  c.detail = msg.str();
  return c;
}

/// char(L) == char(L_A) * char(L_S) as exact polynomials.
inline FormulaCheck check_product_identity(const Graph& g, const DecomposedPair& pair) {
  const auto whole = char_poly_rational(to_rational(laplacian<BigInteger>(g)));
  const auto product = char_poly_surd(pair.l_a) * char_poly_rational(to_rational(pair.l_s));
  std::ostringstream msg;
  msg << "order " << g.vertex_count();
  if (whole == product) return {true, msg.str()};
  for (std::size_t k = 0; k < std::max(whole.coeffs.size(), product.coeffs.size()); ++k) {
    const BigRational lhs = k < whole.coeffs.size() ? whole.coeffs[k] : BigRational(0);
    const BigRational rhs = k < product.coeffs.size() ? product.coeffs[k] : BigRational(0);
    if (lhs != rhs) {
      msg << ": first mismatch at x^" << k << " char(L)=" << lhs << " product=" << rhs;
      break;
    }
  }
  return {false, msg.str()};
}

}  // namespace pentakirch
