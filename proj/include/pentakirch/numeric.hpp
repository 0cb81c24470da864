#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace pentakirch {

/// Arbitrary-precision signed integer.
using BigInteger = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using BigRational = boost::multiprecision::mpq_rational;

/// Raised when an exact computation contradicts an identity that must hold
/// (irrational residue in a rational quantity, oracle mismatch, ...).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const BigInteger& x) { return x == 0; }
inline bool is_zero(const BigRational& x) { return x == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline BigRational divide_by_integer(const BigRational& x, long k) { return x / BigRational(k); }
inline double divide_by_integer(double x, long k) { return x / static_cast<double>(k); }

inline bool is_integral(const BigRational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

/// Numerator of an integral rational; throws ConsistencyError otherwise.
inline BigInteger to_integer(const BigRational& x, const std::string& what) {
  if (!is_integral(x)) {
    throw ConsistencyError(what + " is not an integer: " + x.str());
  }
  return boost::multiprecision::numerator(x);
}

inline double to_double(const BigRational& x) { return x.convert_to<double>(); }
inline double to_double(const BigInteger& x) { return x.convert_to<double>(); }

}  // namespace pentakirch
