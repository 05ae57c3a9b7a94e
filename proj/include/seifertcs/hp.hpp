#pragma once
// High-precision real evaluation (MPFR via Boost.Multiprecision). This is
// the only place floating point exists in the library: exact rationals and
// phases come in, decimal magnitudes come out.

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <utility>

#include "seifertcs/invariants.hpp"
#include "seifertcs/rational.hpp"

namespace seifertcs::hp {

using Real = boost::multiprecision::mpfr_float;

// Scoped default-precision override (decimal digits). Values created while
// the guard lives keep their precision afterwards.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline Real pi() {
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

inline Real to_real(const Rational& q) {
  Real x;
  mpfr_set_q(x.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
  return x;
}

inline Real to_real(const Integer& n) {
  Real x;
  mpfr_set_z(x.backend().data(), n.get_mpz_t(), MPFR_RNDN);
  return x;
}

inline Real sqrt_value(const SqrtRational& s) {
  return Real(sqrt(to_real(s.radicand())));
}

// (cos, sin) of pi * q.
inline std::pair<Real, Real> unit_phase(const PhaseRatPi& p) {
  const Real angle = Real(pi() * to_real(p.q()));
  return {Real(cos(angle)), Real(sin(angle))};
}

// Decimal rendering at the requested significant digits; deterministic for
// a given value and digit count.
inline std::string decimal_string(const Real& x, unsigned digits) {
  return x.str(digits);
}

}  // namespace seifertcs::hp
