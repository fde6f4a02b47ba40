#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dbis {

// Exact arbitrary-precision rational. Average degrees, p, q and the potential
// are all carried in this type so threshold comparisons never round.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// Exact value of a finite double (every double is a dyadic rational).
inline Rational rational_from_double(double x) { return Rational(x); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Always "num/den", including integers ("3/1").
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace dbis
