#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "untangle/errors.hpp"

namespace untangle {

using Rational = mpq_class;

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
}

/// Nearest rational with denominator 10^6 (reduced), for pointer input.
inline Rational rationalize_decimal(double value, long max_den = 1000000) {
  if (!std::isfinite(value)) throw ValidationError("coordinate is not finite");
  const double scaled = std::round(value * static_cast<double>(max_den));
  if (std::fabs(scaled) > 9.0e15) throw ValidationError("coordinate out of range");
  mpz_class num(std::to_string(static_cast<long long>(scaled)));
  return make_rational(num, mpz_class(max_den));
}

inline bool fits_int64(const mpz_class& z) {
  static const mpz_class lo(std::to_string(INT64_MIN));
  static const mpz_class hi(std::to_string(INT64_MAX));
  return z >= lo && z <= hi;
}

}  // namespace untangle
