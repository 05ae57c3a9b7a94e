#pragma once
// Assembly of the abelian partition function. Everything except the final
// complex summation is exact: per-class phases live in PhaseRatPi, the
// common weight in SqrtRational, the level power as a Rational. The
// summation itself runs at a caller-chosen decimal precision (>= 50 by
// default, plus guard digits), and an independent closed-form magnitude
// route is provided for cross-checking.
//
// Per-class values CS = 2*pi*q are *inputs* (mod 1 rationals); nothing in
// this library computes them from the fibration data.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seifertcs/errors.hpp"
#include "seifertcs/hp.hpp"
#include "seifertcs/invariants.hpp"
#include "seifertcs/rational.hpp"
#include "seifertcs/seifert.hpp"
#include "seifertcs/torsion.hpp"

namespace seifertcs {

// One flat-bundle class: its label in the cyclic decomposition (one
// residue per factor of TorsionReport::group_structure, each in [0, d_i))
// and the value q with CS = 2*pi*q, stored reduced mod 1.
struct BundleClassPhase {
  std::vector<Integer> class_label;
  Rational q;

  BundleClassPhase(std::vector<Integer> label, const Rational& value)
      : class_label(std::move(label)), q(value.mod(1)) {}
};

// All class labels of the torsion group, lexicographically ordered, last
// coordinate fastest. Trivial torsion yields the single empty label.
// Enumeration is refused above 10^6 classes: a sum of that size is no
// longer a desk computation, and the closed-form quantities don't need it.
inline std::vector<std::vector<Integer>> enumerate_bundle_classes(
    const TorsionReport& report) {
  if (report.order_closed > 1000000)
    throw std::length_error("enumerate_bundle_classes: torsion order " +
                            report.order_closed.get_str() + " exceeds 10^6");
  const auto& factors = report.group_structure;
  std::vector<std::vector<Integer>> labels;
  labels.reserve(static_cast<std::size_t>(report.order_closed.get_ui()));
  std::vector<Integer> current(factors.size(), Integer(0));
  for (;;) {
    labels.push_back(current);
    // odometer increment
    std::size_t i = factors.size();
    while (i > 0) {
      --i;
      current[i] += 1;
      if (current[i] < factors[i]) break;
      current[i] = 0;
      if (i == 0) return labels;
    }
    if (factors.empty()) return labels;
  }
}

inline std::vector<BundleClassPhase> trivial_phases(const TorsionReport& report) {
  std::vector<BundleClassPhase> out;
  for (auto& label : enumerate_bundle_classes(report))
    out.emplace_back(std::move(label), Rational(0));
  return out;
}

// Exact factorization of one class's contribution:
//   Z_P = k^{m} * K_X * exp(2 pi i k q) * exp(-i pi eta0 / 2) * twist(N, F).
struct PartitionComponent {
  Rational level_power;  // k^{m}, exact (m can be negative)
  SqrtRational weight;   // K_X, identical for every class
  PhaseRatPi phase;      // product of the three unit factors
};

namespace detail {

inline long small_exponent(const Rational& m) {
  if (!m.is_integer() || !m.num().fits_slong_p())
    throw std::logic_error("level exponent is not a small integer");
  return m.num().get_si();
}

}  // namespace detail

inline PartitionComponent partition_component(const SeifertData& d, const TorusRank& n,
                                              long k, const BundleClassPhase& phase,
                                              long framing_units) {
  if (k < 1) throw std::invalid_argument("partition_component: level must be >= 1");
  PartitionComponent out{
      Rational(k).pow(detail::small_exponent(m_exponent(d, n))),
      k_normalization(d, n),
      PhaseRatPi(Rational(2 * k) * phase.q) *
          PhaseRatPi(-eta0(d, n).value / Rational(2)) *
          framing_twist(n, framing_units)};
  return out;
}

struct PerClassRow {
  std::vector<Integer> label;
  Rational cs_q;       // the supplied q, reduced mod 1
  PhaseRatPi phase;    // full unit factor of this class
  SqrtRational weight;
};

struct PartitionResult {
  long k = 1;
  Rational m_exponent;
  std::vector<PerClassRow> per_class;  // lexicographic label order
  Rational moduli_volume = Rational(1);
  long framing_units = 0;
  unsigned digits = 50;

  hp::Real sum_re, sum_im;  // sum of the unit phases
  hp::Real magnitude;       // k^m * K_X * |sum|
  // arg(Z)/pi; absent when the sum cancels below the resolvable threshold
  std::optional<hp::Real> phase_over_pi;
  // exact magnitude sqrt(k^{2m} |Tors|), available iff all phases coincide
  std::optional<SqrtRational> magnitude_exact;
};

namespace detail {

// Validates that the supplied phases cover the canonical class list
// exactly once and returns them in lexicographic label order.
inline std::vector<BundleClassPhase> align_phases(
    const TorsionReport& report, const std::vector<BundleClassPhase>& phases) {
  const auto labels = enumerate_bundle_classes(report);
  if (phases.size() != labels.size())
    throw phase_assignment_error(
        "phase list has " + std::to_string(phases.size()) + " entries, torsion group has " +
        std::to_string(labels.size()) + " classes");
  std::map<std::vector<Integer>, Rational> by_label;
  for (const auto& p : phases) {
    if (!by_label.emplace(p.class_label, p.q).second)
      throw phase_assignment_error("duplicate class label in phase list");
  }
  std::vector<BundleClassPhase> out;
  out.reserve(labels.size());
  for (const auto& label : labels) {
    auto it = by_label.find(label);
    if (it == by_label.end())
      throw phase_assignment_error("phase list does not cover every bundle class");
    out.emplace_back(label, it->second);
  }
  return out;
}

}  // namespace detail

inline PartitionResult partition_sum(const SeifertData& d, const TorusRank& n, long k,
                                     const std::vector<BundleClassPhase>& phases,
                                     long framing_units, unsigned digits = 50) {
  if (k < 1) throw std::invalid_argument("partition_sum: level must be >= 1");
  const TorsionReport report = homology_report(d, n);
  const auto aligned = detail::align_phases(report, phases);

  PartitionResult res;
  res.k = k;
  res.m_exponent = m_exponent(d, n);
  res.framing_units = framing_units;
  res.digits = digits;

  const Rational level_power = Rational(k).pow(detail::small_exponent(res.m_exponent));
  const SqrtRational weight = k_normalization(d, n);
  const PhaseRatPi common =
      PhaseRatPi(-eta0(d, n).value / Rational(2)) * framing_twist(n, framing_units);

  for (const auto& p : aligned)
    res.per_class.push_back(PerClassRow{
        p.class_label, p.q, PhaseRatPi(Rational(2 * k) * p.q) * common, weight});
  bool all_equal = true;
  for (const auto& row : res.per_class)
    if (!(row.phase == res.per_class.front().phase)) all_equal = false;

  // Deterministic sequential reduction in label order, with guard digits.
  hp::PrecisionGuard guard(digits + 20);
  hp::Real re(0), im(0);
  for (const auto& row : res.per_class) {
    auto [c, s] = hp::unit_phase(row.phase);
    re += c;
    im += s;
  }
  res.sum_re = re;
  res.sum_im = im;
  const hp::Real prefactor =
      hp::Real(hp::to_real(level_power) * hp::sqrt_value(weight));
  const hp::Real norm = hp::Real(sqrt(re * re + im * im));
  res.magnitude = hp::Real(prefactor * norm);

  // Phase is only meaningful when the sum is resolvably nonzero.
  const hp::Real threshold = hp::Real(pow(hp::Real(10), -static_cast<int>(digits)));
  if (norm > threshold)
    res.phase_over_pi = hp::Real(atan2(im, re) / hp::pi());

  if (all_equal) {
    // |sum| = order exactly; magnitude = k^m sqrt(|Tors|).
    const Rational order(report.order_closed);
    res.magnitude_exact = weight.scaled(level_power * order);
  }
  return res;
}

// Independent magnitude route: |Z| = k^m |sum_P exp(i k CS_P)| / sqrt(|Tors|)
// with CS_P = 2 pi q_P evaluated directly as a real angle (no exact mod-2
// folding — deliberately a different code path from partition_sum).
inline hp::Real magnitude_formula(const SeifertData& d, const TorusRank& n, long k,
                                  const std::vector<BundleClassPhase>& phases,
                                  unsigned digits = 50) {
  if (k < 1) throw std::invalid_argument("magnitude_formula: level must be >= 1");
  const TorsionReport report = homology_report(d, n);
  const auto aligned = detail::align_phases(report, phases);

  hp::PrecisionGuard guard(digits + 20);
  const hp::Real two_pi_k = hp::Real(2 * k * hp::pi());
  hp::Real re(0), im(0);
  for (const auto& p : aligned) {
    const hp::Real angle = hp::Real(two_pi_k * hp::to_real(p.q));
    re += cos(angle);
    im += sin(angle);
  }
  const hp::Real level =
      hp::to_real(Rational(k).pow(detail::small_exponent(m_exponent(d, n))));
  const hp::Real tors = hp::to_real(Rational(report.order_closed));
  return hp::Real(level * sqrt(re * re + im * im) / sqrt(tors));
}

}  // namespace seifertcs
