#pragma once

#include <pentakirch/graph.hpp>
#include <pentakirch/numeric.hpp>
#include <pentakirch/surd.hpp>

#include <vector>

namespace pentakirch {

/// (25n^2 + 30n - 13) / 60: sum of reciprocal nonzero eigenvalues of the
/// symmetric-mode block.
inline BigRational alpha_ratio_closed(long n) {
  require_chain_length(static_cast<int>(n));
  return BigRational(25 * n * n + 30 * n - 13, 60);
}

/// (-1)^{n+1} 2^n 5 n^2: the x^1 coefficient of the symmetric-mode block's
/// characteristic polynomial.
inline BigInteger alpha_3n_minus_1_closed(long n) {
  require_chain_length(static_cast<int>(n));
  BigInteger v = BigInteger(5 * n * n) << static_cast<unsigned>(n);
  return n % 2 == 1 ? v : BigInteger(-v);
}

/// Surd expression for beta_{2n-1}, evaluated exactly:
///   7 sqrt6/192 [(4 - 2 sqrt6)(5 - 2 sqrt6)^{n-1} - (4 + 2 sqrt6)(5 + 2 sqrt6)^{n-1}]
/// + 7 sqrt3/48  [(4n - 2 sqrt6 n + 1)(sqrt3 - sqrt2)^{2n-1} + (4n + 2 sqrt6 n + 1)(sqrt3 + sqrt2)^{2n-1}]
/// The result must collapse to an integer; anything else throws ConsistencyError.
inline BigInteger beta_closed_form(long n) {
  require_chain_length(static_cast<int>(n));
  const SurdValue r2 = SurdValue::sqrt2(), r3 = SurdValue::sqrt3(), r6 = SurdValue::sqrt6();
  const SurdValue two_r6 = SurdValue(2) * r6;
  const auto m1 = static_cast<unsigned long>(n - 1);
  const auto odd = static_cast<unsigned long>(2 * n - 1);

  const SurdValue first = SurdValue(BigRational(7, 192)) * r6 *
                          ((SurdValue(4) - two_r6) * surd_pow(SurdValue(5) - two_r6, m1) -
                           (SurdValue(4) + two_r6) * surd_pow(SurdValue(5) + two_r6, m1));
  const SurdValue nn(n);
  const SurdValue second = SurdValue(BigRational(7, 48)) * r3 *
                           ((SurdValue(4) * nn - two_r6 * nn + SurdValue(1)) * surd_pow(r3 - r2, odd) +
                            (SurdValue(4) * nn + two_r6 * nn + SurdValue(1)) * surd_pow(r3 + r2, odd));
  const SurdValue beta = first + second;
  if (!beta.is_integral()) {
    throw ConsistencyError("beta closed form for n=" + std::to_string(n) +
                           " did not reduce to an integer: " + beta.str());
  }
  return to_integer(beta.rational_part(), "beta closed form");
}

/// det(L_S) = t_n - 2 (cylinder) or det(L'_S) = t_n + 2 (Moebius).
inline BigInteger antisymmetric_det_closed(GraphFamily f) {
  require_chain_length(f.n);
  const BigInteger t = trace_power_t(f.n);
  return f.variant == Variant::Cylinder ? BigInteger(t - 2) : BigInteger(t + 2);
}

/// Kf = 5n ((25n^2 + 30n - 13)/60 + beta_{2n-1} / (t_n -+ 2)), exact.
inline BigRational kirchhoff_closed(GraphFamily f) {
  require_chain_length(f.n);
  const BigRational antisym = BigRational(beta_closed_form(f.n)) / BigRational(antisymmetric_det_closed(f));
  return BigRational(5L * f.n) * (alpha_ratio_closed(f.n) + antisym);
}

/// tau = 2^n n (t_n -+ 2).
inline BigInteger spanning_trees_closed(GraphFamily f) {
  require_chain_length(f.n);
  return (BigInteger(f.n) << static_cast<unsigned>(f.n)) * antisymmetric_det_closed(f);
}

/// Four-case Wiener formula:
///   cylinder: 25/4 n^3 + 9 n^2       (n even),  ... - n/4   (n odd)
///   Moebius:  25/4 n^3 + 9 n^2 - 2n  (n even),  ... - 9n/4  (n odd)
inline BigInteger wiener_closed(GraphFamily f) {
  require_chain_length(f.n);
  const BigInteger n(f.n);
  BigRational w = BigRational(25, 4) * BigRational(n * n * n) + BigRational(9 * n * n);
  const bool even = f.n % 2 == 0;
  if (f.variant == Variant::Cylinder) {
    if (!even) w -= BigRational(n, 4);
  } else {
    w -= even ? BigRational(2 * n) : BigRational(9 * n, 4);
  }
  return to_integer(w, "Wiener closed form for n=" + std::to_string(f.n));
}

struct RatioPoint {
  int n = 0;
  BigRational kirchhoff;
  BigInteger wiener;
  double ratio = 0.0;  // W / Kf from the exact values
};

/// Exact (Kf, W, W/Kf) rows for n = 2..n_max.
inline std::vector<RatioPoint> ratio_series(Variant variant, int n_max) {
  require_chain_length(n_max);
  std::vector<RatioPoint> rows;
  for (int n = 2; n <= n_max; ++n) {
    const GraphFamily f{variant, n};
    RatioPoint p{n, kirchhoff_closed(f), wiener_closed(f), 0.0};
    p.ratio = to_double(BigRational(p.wiener) / p.kirchhoff);
    rows.push_back(std::move(p));
  }
  return rows;
}

}  // namespace pentakirch
