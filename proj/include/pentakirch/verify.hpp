#pragma once

#include <pentakirch/closed_forms.hpp>
#include <pentakirch/decomposition.hpp>
#include <pentakirch/exact.hpp>
#include <pentakirch/graph.hpp>
#include <pentakirch/parallel.hpp>
#include <pentakirch/spectral.hpp>
#include <pentakirch/surd.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace pentakirch {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a short summary when passing
};

struct VerifyOptions {
  int n_min = 2;
  int n_max = 12;
  bool deep = false;
  /// Fault injection for self-tests: flips the corner sign of every L_S.
  bool corrupt_corner_sign = false;
};

namespace detail {

inline constexpr Variant kVariants[] = {Variant::Cylinder, Variant::Moebius};

inline std::string family_tag(Variant v, int n) {
  return std::string(v == Variant::Cylinder ? "P_" : "P'_") + std::to_string(n);
}

/// Runs body(n, variant) for every n in [lo, hi] and both variants; the
/// body returns an empty string on success or a failure description.
template <typename Body>
CheckResult for_families(std::string name, int lo, int hi, Body body) {
  CheckResult r{std::move(name), true, {}};
  int count = 0;
  for (int n = lo; n <= hi; ++n)
    for (Variant v : kVariants) {
      ++count;
      std::string failure = body(n, v);
      if (!failure.empty()) {
        r.passed = false;
        r.detail = family_tag(v, n) + ": " + failure;
        return r;
      }
    }
  r.detail = std::to_string(count) + " cases, n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
  return r;
}

inline double relative_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

inline DecomposedPair decomposition_for(int n, Variant v, bool corrupt) {
  DecomposedPair pair = build_decomposition(n, v);
  if (corrupt) {
    const std::size_t last = pair.l_s.order() - 1;
    pair.l_s(0, last) = -pair.l_s(0, last);
    pair.l_s(last, 0) = -pair.l_s(last, 0);
  }
  return pair;
}

}  // namespace detail

inline CheckResult check_r_determinants(int max_order = 40) {
  for (int n = 1; n <= max_order; ++n) {
    const BigInteger det = det_bareiss(tridiagonal_r(n));
    const BigInteger expected = (n % 2 == 0 ? 1 : -1) * BigInteger(1 + n);
    if (det != expected) {
      return {"det(R_n) = (-1)^n (1+n)", false,
              "n=" + std::to_string(n) + ": det=" + det.str() + " expected " + expected.str()};
    }
  }
  return {"det(R_n) = (-1)^n (1+n)", true, "n in [1, " + std::to_string(max_order) + "]"};
}

inline CheckResult check_r_marked_determinants(int max_order = 25) {
  const std::string name = "det(R_{n,m}) = (-1)^n (1+n+m+mn-m^2)";
  for (int n = 1; n <= max_order; ++n)
    for (int m = 1; m <= n; ++m) {
      const BigInteger det = det_bareiss(tridiagonal_r_marked(n, m));
      const BigInteger expected = (n % 2 == 0 ? 1 : -1) * BigInteger(1 + n + m + m * n - m * m);
      if (det != expected) {
        return {name, false,
                "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": det=" + det.str() +
                    " expected " + expected.str()};
      }
    }
  return {name, true, "1 <= m <= n <= " + std::to_string(max_order)};
}

/// det(M + e_i e_j^T) = det(M) + cofactor_{ij}(M) over random integer
/// matrices, every (i, j).
inline CheckResult check_matrix_determinant_lemma(int trials = 40, unsigned seed = 20240601u) {
  const std::string name = "matrix-determinant lemma (rank-one update)";
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> order_dist(1, 6);
  for (int t = 0; t < trials; ++t) {
    const auto order = static_cast<std::size_t>(order_dist(rng));
    DenseMatrix<BigInteger> m(order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) m(i, j) = entry(rng);
    const BigInteger base = det_bareiss(m);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) {
        auto updated = m;
        updated(i, j) += 1;
        const BigInteger lhs = det_bareiss(updated);
        const BigInteger rhs = base + cofactor(m, i, j);
        if (lhs != rhs) {
          return {name, false,
                  "trial " + std::to_string(t) + " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                      "): " + lhs.str() + " != " + rhs.str()};
        }
      }
  }
  return {name, true, std::to_string(trials) + " random matrices of order <= 6, all (i,j)"};
}

inline CheckResult check_r_sequences(int closed_limit = 60, int block_limit = 20) {
  const std::string name = "r_i / r'_i sequences vs closed form and band minors";
  for (int i = 0; i <= closed_limit; ++i) {
    const SurdValue closed = r_closed_form(i);
    if (!closed.is_integral() || closed.rational_part() != BigRational(r_sequence(i))) {
      return {name, false, "i=" + std::to_string(i) + ": closed form " + closed.str() + " vs " + r_sequence(i).str()};
    }
  }
  const auto band = band_block((block_limit + 1) / 2);
  const auto size = band.order();
  for (int i = 1; i <= block_limit; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const BigInteger leading = det_bareiss(band.block(0, k));
    const BigInteger trailing = det_bareiss(band.block(size - k, k));
    if (leading != r_sequence(i)) {
      return {name, false, "leading minor i=" + std::to_string(i) + ": " + leading.str() + " vs " + r_sequence(i).str()};
    }
    if (trailing != r_prime_sequence(i)) {
      return {name, false,
              "trailing minor i=" + std::to_string(i) + ": " + trailing.str() + " vs " + r_prime_sequence(i).str()};
    }
  }
  return {name, true,
          "closed form i <= " + std::to_string(closed_limit) + ", minors i <= " + std::to_string(block_limit)};
}

inline CheckResult check_trace_powers(int limit = 60) {
  const std::string name = "t_n = (sqrt2+sqrt3)^{2n} + (sqrt2-sqrt3)^{2n}";
  const SurdValue plus = SurdValue::sqrt2() + SurdValue::sqrt3();
  const SurdValue minus = SurdValue::sqrt2() - SurdValue::sqrt3();
  for (int n = 0; n <= limit; ++n) {
    const auto e = static_cast<unsigned long>(2 * n);
    const SurdValue sum = surd_pow(plus, e) + surd_pow(minus, e);
    if (!sum.is_rational() || sum.rational_part() != BigRational(trace_power_t(n))) {
      return {name, false, "n=" + std::to_string(n) + ": " + sum.str() + " vs " + trace_power_t(n).str()};
    }
  }
  return {name, true, "n in [0, " + std::to_string(limit) + "]"};
}

inline CheckResult check_alpha_formulas(int lo, int hi) {
  CheckResult r{"alpha_{3n-1} and -alpha_{3n-2}/alpha_{3n-1} closed forms", true, {}};
  for (int n = lo; n <= hi; ++n) {
    const auto c = verify_alpha_formulas(n);
    if (!c.ok) return {r.name, false, c.detail};
  }
  r.detail = "n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
  return r;
}

inline CheckResult check_beta_formulas(int lo, int hi) {
  return detail::for_families("beta_{2n-1}: closed form = convolution = char-poly", lo, hi,
                              [](int n, Variant v) -> std::string {
                                const auto c = verify_beta_formula(n, v);
                                return c.ok ? std::string() : c.detail;
                              });
}

inline CheckResult check_antisymmetric_determinants(int lo, int hi, bool corrupt = false) {
  return detail::for_families("det(L_S) = t_n - 2, det(L'_S) = t_n + 2", lo, hi,
                              [corrupt](int n, Variant v) -> std::string {
                                const BigInteger det = det_bareiss(detail::decomposition_for(n, v, corrupt).l_s);
                                const BigInteger expected = antisymmetric_det_closed({v, n});
                                return det == expected ? std::string()
                                                       : "det=" + det.str() + " expected " + expected.str();
                              });
}

inline CheckResult check_product_identities(int lo, int hi, bool corrupt = false) {
  return detail::for_families("char(L) = char(L_A) * char(L_S)", lo, hi,
                              [corrupt](int n, Variant v) -> std::string {
                                const auto c = check_product_identity(build_chain({v, n}),
                                                                      detail::decomposition_for(n, v, corrupt));
                                return c.ok ? std::string() : c.detail;
                              });
}

inline CheckResult check_spectrum_unions(int lo, int hi, bool corrupt = false) {
  double worst = 0.0;
  auto r = detail::for_families("spec(L) = spec(L_A) u spec(L_S)", lo, hi,
                                [&](int n, Variant v) -> std::string {
                                  const auto pair = detail::decomposition_for(n, v, corrupt);
                                  const auto res = spectrum_union_check(
                                      build_chain({v, n}), pair.l_a.map([](const SurdValue& x) { return x.to_double(); }),
                                      pair.l_s.map([](const BigInteger& x) { return to_double(x); }));
                                  worst = std::max(worst, res.max_gap);
                                  if (res.matches) return {};
                                  std::ostringstream msg;
                                  msg << "max gap " << res.max_gap;
                                  return msg.str();
                                });
  if (r.passed) {
    std::ostringstream msg;
    msg << r.detail << ", max gap " << worst;
    r.detail = msg.str();
  }
  return r;
}

inline CheckResult check_kirchhoff_agreement(int lo, int hi, int exact_limit) {
  return detail::for_families(
      "Kf: closed = exact char-poly, closed ~ spectral ~ sum r_ij (rel 1e-8)", lo, hi,
      [exact_limit](int n, Variant v) -> std::string {
        const Graph g = build_chain({v, n});
        const BigRational closed = kirchhoff_closed({v, n});
        if (n <= exact_limit) {
          const BigRational exact = kirchhoff_exact(g);
          if (exact != closed) return "exact " + exact.str() + " != closed " + closed.str();
        }
        const double c = to_double(closed);
        const double spectral = kirchhoff_spectral(g);
        const double resistance = resistance_distances(g).pair_sum();
        if (detail::relative_gap(c, spectral) > 1e-8 || detail::relative_gap(c, resistance) > 1e-8) {
          std::ostringstream msg;
          msg.precision(15);
          msg << "closed " << c << " spectral " << spectral << " resistance " << resistance;
          return msg.str();
        }
        return {};
      });
}

inline CheckResult check_spanning_trees(int lo, int hi) {
  return detail::for_families("tau closed form = Matrix-Tree determinant", lo, hi, [](int n, Variant v) -> std::string {
    const BigInteger closed = spanning_trees_closed({v, n});
    const BigInteger exact = spanning_tree_count(build_chain({v, n}));
    return closed == exact ? std::string() : "closed " + closed.str() + " vs Matrix-Tree " + exact.str();
  });
}

inline CheckResult check_wiener(int lo, int hi) {
  return detail::for_families("W closed form = BFS", lo, hi, [](int n, Variant v) -> std::string {
    const BigInteger closed = wiener_closed({v, n});
    const BigInteger bfs(wiener_index_bfs(build_chain({v, n})));
    return closed == bfs ? std::string() : "closed " + closed.str() + " vs BFS " + bfs.str();
  });
}

inline CheckResult check_order_relations(int lo, int hi) {
  return detail::for_families("Kf < W and r_ij <= d_ij + 1e-9", lo, hi, [](int n, Variant v) -> std::string {
    const Graph g = build_chain({v, n});
    const auto r = resistance_distances(g);
    const auto d = all_pairs_distances(g);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
        if (r(i, j) > static_cast<double>(d(i, j)) + 1e-9) {
          return "r(" + std::to_string(i) + "," + std::to_string(j) + ") exceeds d = " + std::to_string(d(i, j));
        }
    const BigRational kf = kirchhoff_closed({v, n});
    const BigInteger w = wiener_closed({v, n});
    return kf < BigRational(w) ? std::string() : "Kf " + kf.str() + " not below W " + w.str();
  });
}

inline CheckResult check_graph_structure(int lo, int hi) {
  return detail::for_families("|V|=5n, |E|=7n, degrees {3:4n, 2:n}, rail swap automorphism", lo, hi,
                              [](int n, Variant v) -> std::string {
                                const Graph g = build_chain({v, n});
                                const auto un = static_cast<std::size_t>(n);
                                if (g.vertex_count() != 5 * un || g.edge_count() != 7 * un) return "wrong size";
                                std::size_t threes = 0, twos = 0;
                                for (std::size_t x = 0; x < g.vertex_count(); ++x) {
                                  threes += g.degree(x) == 3;
                                  twos += g.degree(x) == 2;
                                }
                                if (threes != 4 * un || twos != un) return "wrong degree multiset";
                                if (!is_connected(g)) return "disconnected";
                                auto swap = [&](std::size_t x) {
                                  if (x < 2 * un) return x + 2 * un;
                                  if (x < 4 * un) return x - 2 * un;
                                  return x;
                                };
                                for (auto [a, b] : g.edges())
                                  if (!g.has_edge(swap(a), swap(b))) return "rail swap is not an automorphism";
                                return {};
                              });
}

/// The full suite in a fixed order. Independent checks run on the worker
/// pool; the returned order does not depend on scheduling.
inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  if (opt.n_min < 2 || opt.n_max < opt.n_min) {
    throw std::invalid_argument("verify requires 2 <= n_min <= n_max");
  }
  const int lo = opt.n_min;
  const int hi = opt.n_max;
  const int exact_cap = std::min(hi, 8);
  const int float_cap = std::min(hi, 20);
  const int tree_hi = opt.deep ? std::max(hi, 30) : hi;
  const int wiener_hi = opt.deep ? std::max(hi, 50) : hi;
  const bool corrupt = opt.corrupt_corner_sign;

  using Check = std::pair<const char*, std::function<CheckResult()>>;
  const std::vector<Check> checks{
      {"graph structure", [&] { return check_graph_structure(lo, std::max(hi, opt.deep ? 50 : hi)); }},
      {"det(R_n)", [] { return check_r_determinants(); }},
      {"det(R_{n,m})", [] { return check_r_marked_determinants(); }},
      {"matrix-determinant lemma", [] { return check_matrix_determinant_lemma(); }},
      {"r_i / r'_i sequences", [] { return check_r_sequences(); }},
      {"t_n trace powers", [] { return check_trace_powers(); }},
      {"alpha formulas", [&] { return check_alpha_formulas(lo, exact_cap); }},
      {"beta formulas", [&] { return check_beta_formulas(lo, exact_cap); }},
      {"det(L_S)", [&] { return check_antisymmetric_determinants(lo, tree_hi, corrupt); }},
      {"char-poly product identity", [&] { return check_product_identities(lo, exact_cap, corrupt); }},
      {"spectrum union", [&] { return check_spectrum_unions(lo, float_cap, corrupt); }},
      {"Kf agreement", [&] { return check_kirchhoff_agreement(lo, float_cap, exact_cap); }},
      {"spanning trees", [&] { return check_spanning_trees(lo, tree_hi); }},
      {"Wiener index", [&] { return check_wiener(lo, wiener_hi); }},
      {"order relations", [&] { return check_order_relations(lo, hi); }},
  };
  return parallel_map(checks, [](const Check& check) {
    try {
      return check.second();
    } catch (const std::exception& e) {
      return CheckResult{std::string(check.first) + " (raised)", false, e.what()};
    }
  });
}

}  // namespace pentakirch
