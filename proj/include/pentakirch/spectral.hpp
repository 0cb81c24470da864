#pragma once

#include <pentakirch/graph.hpp>
#include <pentakirch/matrix.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pentakirch {

/// Eigenvalues in ascending order; eigenvectors (when requested) are the
/// matching orthonormal columns.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::optional<DenseMatrix<double>> eigenvectors;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps until the off-diagonal Frobenius norm drops below 1e-12 times the
/// matrix Frobenius norm; gives up after max_sweeps.
inline Spectrum eigen_symmetric(const DenseMatrix<double>& input, bool want_vectors = false,
                                int max_sweeps = 100) {
  const std::size_t n = input.order();
  double frobenius = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frobenius += input(i, j) * input(i, j);
  frobenius = std::sqrt(frobenius);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(input(i, j) - input(j, i)) > 1e-12 * std::max(1.0, frobenius)) {
        throw std::invalid_argument("eigen_symmetric: matrix is not symmetric");
      }

  DenseMatrix<double> a = input;
  auto v = DenseMatrix<double>::identity(n);
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  const double threshold = 1e-12 * frobenius;

  int sweep = 0;
  while (off_norm() > threshold) {
    if (++sweep > max_sweeps) {
      throw ConvergenceError("eigen_symmetric: no convergence after " + std::to_string(max_sweeps) +
                             " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle zeroing a(p,q) (Golub & Van Loan, sym.Schur2).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v(k, p), vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  Spectrum out;
  out.eigenvalues.reserve(n);
  for (std::size_t i : order) out.eigenvalues.push_back(a(i, i));
  if (want_vectors) {
    DenseMatrix<double> sorted(n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) sorted(r, c) = v(r, order[c]);
    out.eigenvectors = std::move(sorted);
  }
  return out;
}

/// Eigenvalues with |lambda| below this count as zero.
inline double zero_tolerance(const Spectrum& s) {
  const double top = s.eigenvalues.empty() ? 0.0 : std::abs(s.eigenvalues.back());
  return 1e-9 * std::max(1.0, top);
}

namespace detail {

inline Spectrum connected_laplacian_spectrum(const Graph& g, bool want_vectors) {
  Spectrum s = eigen_symmetric(laplacian<double>(g), want_vectors);
  const double tol = zero_tolerance(s);
  const auto zeros = std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(),
                                   [tol](double x) { return std::abs(x) < tol; });
  if (zeros != 1) throw std::domain_error("graph is disconnected (Laplacian nullity != 1)");
  return s;
}

}  // namespace detail

/// Kf(G) = |V| * sum over nonzero Laplacian eigenvalues of 1/lambda.
inline double kirchhoff_spectral(const Graph& g) {
  const Spectrum s = detail::connected_laplacian_spectrum(g, false);
  double sum = 0.0;
  for (std::size_t k = 1; k < s.eigenvalues.size(); ++k) sum += 1.0 / s.eigenvalues[k];
  return static_cast<double>(g.vertex_count()) * sum;
}

/// Number of spanning trees as the product of nonzero eigenvalues over |V|.
inline double spanning_tree_count_spectral(const Graph& g) {
  const Spectrum s = detail::connected_laplacian_spectrum(g, false);
  double product = 1.0;
  for (std::size_t k = 1; k < s.eigenvalues.size(); ++k) product *= s.eigenvalues[k];
  return product / static_cast<double>(g.vertex_count());
}

/// Moore-Penrose pseudoinverse of a symmetric matrix, inverting only
/// eigenvalues above the zero tolerance.
inline DenseMatrix<double> pseudoinverse_symmetric(const DenseMatrix<double>& m) {
  const Spectrum s = eigen_symmetric(m, true);
  const double tol = zero_tolerance(s);
  const auto& v = *s.eigenvectors;
  const std::size_t n = m.order();
  DenseMatrix<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(s.eigenvalues[k]) < tol) continue;
    const double inv = 1.0 / s.eigenvalues[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += inv * v(i, k) * v(j, k);
  }
  return out;
}

/// Symmetric matrix of effective resistances with zero diagonal.
class ResistanceMatrix {
 public:
  explicit ResistanceMatrix(DenseMatrix<double> entries) : entries_(std::move(entries)) {}

  std::size_t order() const noexcept { return entries_.order(); }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const DenseMatrix<double>& entries() const noexcept { return entries_; }

  /// Sum over unordered pairs, i.e. the Kirchhoff index.
  double pair_sum() const {
    double s = 0.0;
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = i + 1; j < order(); ++j) s += entries_(i, j);
    return s;
  }

 private:
  DenseMatrix<double> entries_;
};

/// r_ij = G_ii + G_jj - 2 G_ij with G the Laplacian pseudoinverse.
inline ResistanceMatrix resistance_distances(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("graph is disconnected");
  const DenseMatrix<double> gamma = pseudoinverse_symmetric(laplacian<double>(g));
  const std::size_t n = g.vertex_count();
  DenseMatrix<double> r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double value = std::max(0.0, gamma(i, i) + gamma(j, j) - 2.0 * gamma(i, j));
      r(i, j) = r(j, i) = value;
    }
  return ResistanceMatrix(std::move(r));
}

struct SpectrumUnionResult {
  bool matches = false;
  double max_gap = 0.0;
};

/// Compares the Laplacian spectrum of g with the merged spectra of the two
/// decomposed blocks.
inline SpectrumUnionResult spectrum_union_check(const Graph& g, const DenseMatrix<double>& block_a,
                                                const DenseMatrix<double>& block_s,
                                                double tolerance = 1e-8) {
  if (block_a.order() + block_s.order() != g.vertex_count()) {
    throw std::invalid_argument("spectrum_union_check: block orders do not add up to |V|");
  }
  const auto whole = eigen_symmetric(laplacian<double>(g)).eigenvalues;
  auto parts = eigen_symmetric(block_a).eigenvalues;
  const auto s = eigen_symmetric(block_s).eigenvalues;
  parts.insert(parts.end(), s.begin(), s.end());
  std::sort(parts.begin(), parts.end());
  SpectrumUnionResult out;
  for (std::size_t i = 0; i < whole.size(); ++i) out.max_gap = std::max(out.max_gap, std::abs(whole[i] - parts[i]));
  out.matches = out.max_gap < tolerance;
  return out;
}

}  // namespace pentakirch
