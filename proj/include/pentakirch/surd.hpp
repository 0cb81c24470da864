#pragma once

#include <pentakirch/numeric.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pentakirch {

/// Exact element a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) of Q(sqrt2, sqrt3).
///
/// The four basis elements are Q-linearly independent, so the coefficient
/// representation is unique and equality is coefficientwise.
class SurdValue {
 public:
  SurdValue() = default;
  SurdValue(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  SurdValue(BigRational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  SurdValue(BigRational a, BigRational b, BigRational c, BigRational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static SurdValue sqrt2() { return {0, 1, 0, 0}; }
  static SurdValue sqrt3() { return {0, 0, 1, 0}; }
  static SurdValue sqrt6() { return {0, 0, 0, 1}; }

  const BigRational& rational_part() const noexcept { return a_; }
  const BigRational& sqrt2_part() const noexcept { return b_; }
  const BigRational& sqrt3_part() const noexcept { return c_; }
  const BigRational& sqrt6_part() const noexcept { return d_; }

  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_integral() const { return is_rational() && pentakirch::is_integral(a_); }
  bool is_zero() const { return a_ == 0 && is_rational(); }

  /// Image under sqrt2 -> -sqrt2 (so sqrt6 -> -sqrt6).
  SurdValue conjugate_sqrt2() const { return {a_, -b_, c_, -d_}; }
  /// Image under sqrt3 -> -sqrt3 (so sqrt6 -> -sqrt6).
  SurdValue conjugate_sqrt3() const { return {a_, b_, -c_, -d_}; }

  /// Multiplicative inverse via the two field conjugations:
  /// x * conj3(x) lies in Q(sqrt2), and y * conj2(y) is rational for y there.
  SurdValue inverse() const {
    if (is_zero()) throw std::domain_error("SurdValue: division by zero");
    const SurdValue partial = *this * conjugate_sqrt3();
    const SurdValue norm = partial * partial.conjugate_sqrt2();
    if (!norm.is_rational()) throw ConsistencyError("SurdValue norm is not rational");
    return conjugate_sqrt3() * partial.conjugate_sqrt2() * SurdValue(1 / norm.a_);
  }

  double to_double() const {
    return pentakirch::to_double(a_) + pentakirch::to_double(b_) * std::sqrt(2.0) +
           pentakirch::to_double(c_) * std::sqrt(3.0) + pentakirch::to_double(d_) * std::sqrt(6.0);
  }

  std::string str() const {
    std::string out = a_.str();
    auto term = [&out](const BigRational& q, const char* root) {
      if (q == 0) return;
      out += q < 0 ? " - " : " + ";
      out += BigRational(abs(q)).str();
      out += root;
    };
    term(b_, "*sqrt2");
    term(c_, "*sqrt3");
    term(d_, "*sqrt6");
    return out;
  }

  SurdValue& operator+=(const SurdValue& o) {
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
  }
  SurdValue& operator-=(const SurdValue& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
  }
  SurdValue& operator*=(const SurdValue& o) { return *this = *this * o; }

  friend SurdValue operator+(SurdValue x, const SurdValue& y) { return x += y; }
  friend SurdValue operator-(SurdValue x, const SurdValue& y) { return x -= y; }
  friend SurdValue operator-(const SurdValue& x) { return {-x.a_, -x.b_, -x.c_, -x.d_}; }

  // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2, sqrt6^2 = 6.
  friend SurdValue operator*(const SurdValue& x, const SurdValue& y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_ + 3 * x.c_ * y.c_ + 6 * x.d_ * y.d_,
            x.a_ * y.b_ + x.b_ * y.a_ + 3 * (x.c_ * y.d_ + x.d_ * y.c_),
            x.a_ * y.c_ + x.c_ * y.a_ + 2 * (x.b_ * y.d_ + x.d_ * y.b_),
            x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_};
  }

  friend SurdValue operator/(const SurdValue& x, const SurdValue& y) {
    if (y.is_rational()) {
      if (y.a_ == 0) throw std::domain_error("SurdValue: division by zero");
      return {x.a_ / y.a_, x.b_ / y.a_, x.c_ / y.a_, x.d_ / y.a_};
    }
    return x * y.inverse();
  }

  friend bool operator==(const SurdValue& x, const SurdValue& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  BigRational a_, b_, c_, d_;
};

inline bool is_zero(const SurdValue& x) { return x.is_zero(); }

inline SurdValue divide_by_integer(const SurdValue& x, long k) { return x / SurdValue(k); }

/// x^k by repeated squaring.
inline SurdValue surd_pow(SurdValue x, unsigned long k) {
  SurdValue result(1);
  while (k > 0) {
    if (k & 1UL) result *= x;
    k >>= 1;
    if (k > 0) x *= x;
  }
  return result;
}

inline SurdValue surd_mul(const SurdValue& x, const SurdValue& y) { return x * y; }

namespace detail {

/// Order-4 recurrence u_i = 10 u_{i-2} - u_{i-4} from four seeds.
inline BigInteger ten_recurrence(long i, const BigInteger (&seed)[4]) {
  if (i < 0) throw std::domain_error("sequence index must be >= 0");
  if (i < 4) return seed[i];
  std::vector<BigInteger> u(seed, seed + 4);
  u.reserve(static_cast<std::size_t>(i) + 1);
  for (long k = 4; k <= i; ++k) u.push_back(10 * u[k - 2] - u[k - 4]);
  return u.back();
}

}  // namespace detail

/// t_n = (5 + 2 sqrt6)^n + (5 - 2 sqrt6)^n, via t_0 = 2, t_1 = 10,
/// t_{k+1} = 10 t_k - t_{k-1}.
inline BigInteger trace_power_t(long n) {
  if (n < 0) throw std::domain_error("trace_power_t: n must be >= 0");
  BigInteger prev(2), cur(10);
  if (n == 0) return prev;
  for (long k = 1; k < n; ++k) {
    BigInteger next = 10 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Leading principal minors of the band matrix with diagonal 4,3,4,3,...
/// and off-diagonal -1: r_0 = 1, r_1 = 4, r_2 = 11, r_3 = 40.
inline BigInteger r_sequence(long i) {
  static const BigInteger seed[4] = {BigInteger(1), BigInteger(4), BigInteger(11), BigInteger(40)};
  return detail::ten_recurrence(i, seed);
}

/// Trailing principal minors of the same band matrix (its series is
/// (x^2 + 3x + 1) / (x^4 - 10x^2 + 1)): 1, 3, 11, 30, ...
inline BigInteger r_prime_sequence(long i) {
  static const BigInteger seed[4] = {BigInteger(1), BigInteger(3), BigInteger(11), BigInteger(30)};
  return detail::ten_recurrence(i, seed);
}

/// r_i from the four-root closed form
///   s1 (sqrt2+sqrt3)^i + s2 (-sqrt2-sqrt3)^i + s3 (sqrt2-sqrt3)^i + s4 (-sqrt2+sqrt3)^i
/// with s1..s4 = (root)(+-2 + sqrt3) / (4 sqrt6), evaluated exactly.
inline SurdValue r_closed_form(long i) {
  if (i < 0) throw std::domain_error("r_closed_form: index must be >= 0");
  const SurdValue s2 = SurdValue::sqrt2(), s3 = SurdValue::sqrt3(), s6 = SurdValue::sqrt6();
  const SurdValue denom = SurdValue(4) * s6;
  const SurdValue plus = s2 + s3;   // sqrt2 + sqrt3
  const SurdValue minus = s2 - s3;  // sqrt2 - sqrt3
  const SurdValue k1 = plus * (SurdValue(2) + s3) / denom;
  const SurdValue k2 = plus * (SurdValue(-2) + s3) / denom;
  const SurdValue k3 = minus * (SurdValue(-2) + s3) / denom;
  const SurdValue k4 = minus * (SurdValue(2) + s3) / denom;
  const auto e = static_cast<unsigned long>(i);
  return k1 * surd_pow(plus, e) + k2 * surd_pow(-plus, e) + k3 * surd_pow(minus, e) +
         k4 * surd_pow(-minus, e);
}

/// Coefficient of x^k in f(x) g(x), where f and g are the generating
/// functions of r and r'.
inline BigInteger r_convolution(long k) {
  if (k < 0) return BigInteger(0);
  std::vector<BigInteger> r{1, 4, 11, 40}, rp{1, 3, 11, 30};
  for (long i = 4; i <= k; ++i) {
    r.push_back(10 * r[i - 2] - r[i - 4]);
    rp.push_back(10 * rp[i - 2] - rp[i - 4]);
  }
  BigInteger sum(0);
  for (long i = 0; i <= k; ++i) sum += r[i] * rp[k - i];
  return sum;
}

/// beta_{2n-1} from the sequences: [x^{2n-1}] f g - [x^{2n-3}] f g.
inline BigInteger beta_by_convolution(long n) {
  if (n < 2) throw std::domain_error("beta_by_convolution: n must be >= 2");
  return r_convolution(2 * n - 1) - r_convolution(2 * n - 3);
}

}  // namespace pentakirch
