#pragma once
// Exact value types for the pieces the partition function is assembled
// from, plus the spectral-flow style invariants themselves:
//
//   PhaseRatPi    — a unit complex number exp(i pi q), q rational mod 2;
//   SqrtRational  — a positive real sqrt(r), r rational, closed under
//                   multiplication, with exact detection of rationality;
//   EtaZero       — the adiabatic eta invariant of the degree-zero part;
//   framing/twist — the two routes to the framing anomaly phase.
//
// Everything here is exact; no floating point enters until the final
// high-precision evaluation stage.

#include <string>

#include "seifertcs/dedekind.hpp"
#include "seifertcs/errors.hpp"
#include "seifertcs/rational.hpp"
#include "seifertcs/seifert.hpp"

namespace seifertcs {

// exp(i pi q) with q kept reduced into [0, 2). Group law is multiplication.
class PhaseRatPi {
 public:
  PhaseRatPi() : q_(0) {}
  explicit PhaseRatPi(const Rational& q) : q_(q.mod(2)) {}

  static PhaseRatPi identity() { return PhaseRatPi(); }

  const Rational& q() const { return q_; }

  PhaseRatPi operator*(const PhaseRatPi& o) const { return PhaseRatPi(q_ + o.q_); }
  PhaseRatPi inverse() const { return PhaseRatPi(-q_); }

  bool is_real() const { return q_ == 0 || q_ == 1; }

  friend bool operator==(const PhaseRatPi&, const PhaseRatPi&) = default;

  std::string to_string() const { return q_.to_string() + "*pi"; }

 private:
  Rational q_;
};

// sqrt(r) for rational r > 0, stored by its radicand. The product rule
// sqrt(r) * sqrt(r') = sqrt(r r') and scaling by positive rationals keep
// the representation closed; perfect-square radicands collapse exactly.
class SqrtRational {
 public:
  explicit SqrtRational(const Rational& radicand) : r_(radicand) {
    if (r_ <= 0)
      throw std::domain_error("SqrtRational: radicand must be positive, got " +
                              r_.to_string());
  }

  static SqrtRational one() { return SqrtRational(Rational(1)); }

  const Rational& radicand() const { return r_; }
  Rational squared() const { return r_; }

  SqrtRational operator*(const SqrtRational& o) const {
    return SqrtRational(r_ * o.r_);
  }

  // a * sqrt(r) = sqrt(a^2 r), valid for positive rational a.
  SqrtRational scaled(const Rational& a) const {
    if (a <= 0)
      throw std::domain_error("SqrtRational: scale factor must be positive");
    return SqrtRational(a * a * r_);
  }

  bool is_rational() const {
    return mpz_perfect_square_p(r_.num().get_mpz_t()) &&
           mpz_perfect_square_p(r_.den().get_mpz_t());
  }

  Rational as_rational() const {
    if (!is_rational())
      throw std::domain_error("SqrtRational: " + to_string() + " is irrational");
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), r_.num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r_.den().get_mpz_t());
    return Rational(n, d);
  }

  friend bool operator==(const SqrtRational&, const SqrtRational&) = default;

  std::string to_string() const {
    if (is_rational()) return as_rational().to_string();
    return "sqrt(" + r_.to_string() + ")";
  }

 private:
  Rational r_;
};

// Strong type so an eta value cannot be confused with a bare rational in
// the phase bookkeeping below.
struct EtaZero {
  Rational value;
  friend bool operator==(const EtaZero&, const EtaZero&) = default;
};

// Adiabatic eta invariant of the fiberwise-flat connection complex:
//   eta0 = N * ( c1/6 - 2 * sum_j s(alpha_j, beta_j) ).
inline EtaZero eta0(const SeifertData& d, const TorusRank& n) {
  Rational dedekind_total(0);
  for (const auto& cone : d.cones())
    dedekind_total += dedekind_sum_fast(DedekindArgs(cone.alpha, cone.beta));
  Rational value =
      Rational(n.value()) * (chern_number(d) / Rational(6) - Rational(2) * dedekind_total);
  return EtaZero{value};
}

// Smooth circle bundle of degree d over a surface: eta0 = -d N / 6,
// independent of the genus. (Sign conventions tie this to the reversed
// orientation relative to eta0 above; only orientation-independent
// combinations of the two are asserted anywhere.)
inline EtaZero circle_bundle_eta0(const TorusRank& n, long degree) {
  return EtaZero{Rational(-degree * n.value(), 6)};
}

// Power of the level k multiplying the partition function:
// m = (N/2)(2g - 2) = N (g - 1), from the moduli of flat connections on
// the degree-zero part. Integral, but returned as Rational because it is
// born as a half-integer combination. Undefined when c1 = 0 (the moduli
// space changes character there).
inline Rational m_exponent(const SeifertData& d, const TorusRank& n) {
  if (chern_number(d) == 0)
    throw zero_chern_error(
        "level exponent is undefined when the orbifold Chern number vanishes");
  return Rational(n.value(), 2) * Rational(2 * d.genus() - 2);
}

// Overall normalization 1/sqrt(|torsion|); kept as an exact SqrtRational.
// Forward-declared against torsion.hpp to avoid an include cycle: the
// order is recomputed here from the closed form.
inline SqrtRational k_normalization(const SeifertData& d, const TorusRank& n) {
  const Rational c1 = chern_number(d);
  if (c1 == 0)
    throw zero_chern_error(
        "normalization is undefined when the orbifold Chern number vanishes");
  Rational scaled = c1;
  for (const auto& cone : d.cones()) scaled *= Rational(cone.alpha);
  Rational order = scaled.abs().pow(n.value());
  return SqrtRational(Rational(1) / order);
}

// Framing anomaly of F units of twist: exp(2 pi i N F / 24), i.e.
// q = N F / 12 in pi-units.
inline PhaseRatPi framing_twist(const TorusRank& n, long twist_units) {
  return PhaseRatPi(Rational(n.value() * twist_units, 12));
}

// Phase relating the fibration framing to the canonical one:
// exp(i pi (N/4 + eta0/2)).
inline PhaseRatPi seifert_framing_phase(const TorusRank& n, const EtaZero& eta) {
  return PhaseRatPi(Rational(n.value(), 4) + eta.value / Rational(2));
}

}  // namespace seifertcs
