#pragma once
// Dedekind sums in the modulus-first convention used throughout this
// library: s(alpha, beta) sums the sawtooth products over residues mod
// alpha. Two independent evaluators are kept deliberately:
//
//   dedekind_sum_direct — the defining O(alpha) sawtooth sum, pure integer
//     arithmetic (the oracle);
//   dedekind_sum_fast  — O(log alpha) via the reciprocity law (the one the
//     invariant pipeline calls).
//
// Both reduce beta mod alpha first; the sum is periodic in beta.

#include <cstdint>
#include <stdexcept>

#include "seifertcs/errors.hpp"
#include "seifertcs/rational.hpp"

namespace seifertcs {

struct DedekindArgs {
  Integer alpha;  // modulus, >= 1
  Integer beta;   // coprime to alpha
  DedekindArgs(Integer a, Integer b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha < 1)
      throw semantic_error("Dedekind modulus must be at least 1, got " + alpha.get_str());
    if (gcd(alpha, beta) != 1)
      throw semantic_error("Dedekind arguments (" + alpha.get_str() + "," +
                           beta.get_str() + ") are not coprime");
  }
};

// s(alpha, beta) = sum_{j=1}^{alpha-1} ((j/alpha)) ((j*beta/alpha)).
// With r_j = j*beta mod alpha and both sawtooth factors cleared of their
// denominators, 4*alpha^2*s = sum (2j - alpha)(2 r_j - alpha): the whole
// computation is integer until the final division. r_j is updated
// incrementally, so no multiplication ever leaves machine range on the
// fast path below.
inline Rational dedekind_sum_direct(const DedekindArgs& args) {
  if (args.alpha == 1) return Rational(0);

  // Machine path: for alpha <= 10^6 every partial product is bounded by
  // alpha^3 <= 10^18 < 2^63, so a plain int64 accumulator is exact.
  if (args.alpha <= 1000000) {
    const std::int64_t a = args.alpha.get_si();
    const std::int64_t b = floor_mod(args.beta, args.alpha).get_si();
    std::int64_t sum = 0;
    std::int64_t r = 0;
    for (std::int64_t j = 1; j < a; ++j) {
      r += b;
      if (r >= a) r -= a;
      sum += (2 * j - a) * (2 * r - a);
    }
    return Rational(Integer(sum), 4 * Integer(a) * Integer(a));
  }

  // Arbitrary-precision fallback; correct for any alpha that fits an
  // unsigned long loop counter (larger moduli are not realistically
  // summable term by term anyway).
  if (!args.alpha.fits_ulong_p())
    throw std::overflow_error("dedekind_sum_direct: modulus too large to iterate");
  const unsigned long a = args.alpha.get_ui();
  const Integer alpha = args.alpha;
  const Integer beta = floor_mod(args.beta, alpha);
  Integer sum = 0;
  Integer r = 0;
  for (unsigned long j = 1; j < a; ++j) {
    r += beta;
    if (r >= alpha) r -= alpha;
    sum += (2 * Integer(j) - alpha) * (2 * r - alpha);
  }
  return Rational(sum, 4 * alpha * alpha);
}

// Reciprocity descent. In the classical orientation s_c(h, k) (modulus
// second) the law gives, for coprime 0 < h < k,
//   s_c(h, k) = -1/4 + (h^2 + k^2 + 1) / (12 h k) - s_c(k mod h, h),
// and s(alpha, beta) = s_c(beta mod alpha, alpha). Iterating is a Euclidean
// descent, so the cost is logarithmic in alpha.
inline Rational dedekind_sum_fast(const DedekindArgs& args) {
  Integer k = args.alpha;
  Integer h = floor_mod(args.beta, k);
  Rational acc(0);
  int sign = 1;
  while (h != 0) {
    acc += Rational(sign) *
           (Rational(-1, 4) + Rational(h * h + k * k + 1, 12 * h * k));
    Integer next = floor_mod(k, h);
    k = h;
    h = next;
    sign = -sign;
  }
  return acc;
}

}  // namespace seifertcs
