#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dbis {

// Binomial pmf with small relative error for every (x, n, p), following
// Loader's saddle-point decomposition: the pmf is written as
// exp(-(stirling corrections) - deviance terms) / sqrt(2 pi x (n - x) / n), and
// every term is evaluated without cancellation between large logarithms.

namespace detail {

// log(n!) - log(sqrt(2 pi n) (n/e)^n)
inline double stirlerr(std::uint64_t n) {
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  if (n < 16) {
    const long double nn = static_cast<long double>(n);
    constexpr long double log_sqrt_2pi = 0.918938533204672741780329736405617639861L;
    return static_cast<double>(std::lgamma(nn + 1.0L) - (nn + 0.5L) * std::log(nn) + nn - log_sqrt_2pi);
  }
  const double n1 = 1.0 / static_cast<double>(n);
  const double n2 = n1 * n1;
  if (n > 500) return (s0 - s1 * n2) * n1;
  if (n > 80) return (s0 - (s1 - s2 * n2) * n2) * n1;
  if (n > 35) return (s0 - (s1 - (s2 - s3 * n2) * n2) * n2) * n1;
  return (s0 - (s1 - (s2 - (s3 - s4 * n2) * n2) * n2) * n2) * n1;
}

// Deviance term x log(x / np) + np - x.
inline double bd0(double x, double np) {
  if (std::fabs(x - np) < 0.1 * (x + np)) {
    const double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2 * x * v;
    const double v2 = v * v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v2;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

}  // namespace detail

/// P[Bin(n, p) = x] where np = n p and nq = n (1 - p) are supplied directly so
/// callers with p = 1/n can pass them exactly.
inline double binomial_pmf_raw(std::uint64_t x, std::uint64_t n, double np, double nq) {
  const double nd = static_cast<double>(n);
  if (x > n) return 0.0;
  if (np == 0.0) return x == 0 ? 1.0 : 0.0;
  if (nq == 0.0) return x == n ? 1.0 : 0.0;
  const double p = np / nd;
  const double q = nq / nd;
  if (x == 0) {
    const double lc = p < 0.1 ? -detail::bd0(nd, nq) - np : nd * std::log1p(-p);
    return std::exp(lc);
  }
  if (x == n) {
    const double lc = q < 0.1 ? -detail::bd0(nd, np) - nq : nd * std::log(p);
    return std::exp(lc);
  }
  const double xd = static_cast<double>(x);
  const double lc = detail::stirlerr(n) - detail::stirlerr(x) - detail::stirlerr(n - x) -
                    detail::bd0(xd, np) - detail::bd0(nd - xd, nq);
  constexpr double two_pi = 6.283185307179586476925287;
  return std::exp(lc) * std::sqrt(nd / (two_pi * xd * (nd - xd)));
}

inline double binomial_pmf(std::uint64_t x, std::uint64_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binomial_pmf: p outside [0,1]");
  const double nd = static_cast<double>(n);
  return binomial_pmf_raw(x, n, nd * p, nd * (1.0 - p));
}

/// q = P[Bin(d, 1/d) = ell]: the probability that a fixed size-d candidate set
/// meets a p = 1/d sample in exactly ell vertices.
inline double exact_q(std::uint64_t d, std::uint64_t ell) {
  if (d < 1) throw std::domain_error("exact_q: d must be at least 1");
  if (ell > d) {
    throw std::domain_error("exact_q: ell = " + std::to_string(ell) + " exceeds d = " + std::to_string(d));
  }
  return binomial_pmf_raw(ell, d, 1.0, static_cast<double>(d - 1));
}

}  // namespace dbis
