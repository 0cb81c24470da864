#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pentakirch {

/// Dense square matrix over a scalar ring S, stored row-major.
///
/// S must be constructible from an int (0 and 1 are used for fill and
/// identity). Indices are zero-based.
template <typename S>
class DenseMatrix {
 public:
  using Scalar = S;

  DenseMatrix() = default;

  explicit DenseMatrix(std::size_t order, const S& fill = S(0))
      : order_(order), entries_(order * order, fill) {}

  static DenseMatrix identity(std::size_t order) {
    DenseMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = S(1);
    return m;
  }

  /// Builds from nested rows; every row must have rows.size() entries.
  static DenseMatrix from_rows(const std::vector<std::vector<S>>& rows) {
    DenseMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw std::invalid_argument("DenseMatrix::from_rows: matrix is not square");
      }
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t order() const noexcept { return order_; }
  bool empty() const noexcept { return order_ == 0; }

  S& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  std::span<const S> row(std::size_t i) const {
    return std::span<const S>(entries_).subspan(i * order_, order_);
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = i + 1; j < order_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  S trace() const {
    S t(0);
    for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Copy with row and column k removed.
  DenseMatrix without(std::size_t k) const {
    if (k >= order_) throw std::out_of_range("DenseMatrix::without: index out of range");
    DenseMatrix m(order_ - 1);
    for (std::size_t i = 0, r = 0; i < order_; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0, c = 0; j < order_; ++j) {
        if (j == k) continue;
        m(r, c++) = (*this)(i, j);
      }
      ++r;
    }
    return m;
  }

  /// Principal block on indices [first, first + count).
  DenseMatrix block(std::size_t first, std::size_t count) const {
    if (first + count > order_) throw std::out_of_range("DenseMatrix::block: range out of bounds");
    DenseMatrix m(count);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(first + i, first + j);
    return m;
  }

  /// Entrywise conversion to another scalar type.
  template <typename F>
  auto map(F&& f) const -> DenseMatrix<decltype(f(std::declval<const S&>()))> {
    DenseMatrix<decltype(f(std::declval<const S&>()))> out(order_);
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<S> entries_;
};

template <typename S>
DenseMatrix<S> operator*(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("matrix product: order mismatch");
  const std::size_t n = a.order();
  DenseMatrix<S> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const S& aik = a(i, k);
      if (aik == S(0)) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

/// Polynomial with ascending coefficients: coeffs[k] multiplies x^k.
template <typename S>
struct Polynomial {
  std::vector<S> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Coefficient of x^k; k outside [0, degree] is a domain error.
template <typename S>
const S& coefficient(const Polynomial<S>& p, long k) {
  if (k < 0 || p.coeffs.empty() || static_cast<std::size_t>(k) > p.degree()) {
    throw std::domain_error("coefficient index " + std::to_string(k) + " outside [0, " +
                            std::to_string(p.degree()) + "]");
  }
  return p.coeffs[static_cast<std::size_t>(k)];
}

template <typename S>
Polynomial<S> operator*(const Polynomial<S>& a, const Polynomial<S>& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  Polynomial<S> c{std::vector<S>(a.coeffs.size() + b.coeffs.size() - 1, S(0))};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return c;
}

}  // namespace pentakirch
