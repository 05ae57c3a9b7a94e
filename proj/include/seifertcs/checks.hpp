#pragma once
// Self-contained property suites behind `check {dedekind,torsion,
// regularization,all}`. Each suite returns a list of named results; the
// CLI renders them, the test binaries assert on them. All randomness is
// seeded with fixed constants so every run sees the same cases.

#include <random>
#include <string>
#include <vector>

#include "seifertcs/dedekind.hpp"
#include "seifertcs/invariants.hpp"
#include "seifertcs/partition.hpp"
#include "seifertcs/rational.hpp"
#include "seifertcs/regularization.hpp"
#include "seifertcs/seifert.hpp"
#include "seifertcs/torsion.hpp"

namespace seifertcs {

struct CheckResult {
  std::string name;
  bool passed = false;
  long cases = 0;
  std::string detail;  // first failure, empty when passed
};

// Deterministic study catalog: the L(p,1) family, the Poincaré sphere, and
// mixed cone data through genus 3. Everything has c1 != 0.
inline std::vector<SeifertData> builtin_catalog() {
  static const char* entries[] = {
      // lens spaces L(p,1)
      "[0, 1;]", "[0, 2;]", "[0, 3;]", "[0, 4;]", "[0, 5;]", "[0, 6;]", "[0, 7;]",
      "[0, 8;]", "[0, 9;]", "[0, 10;]",
      // Poincaré sphere
      "[0, -1; (2,1), (3,1), (5,1)]",
      // genus 0, mixed cones
      "[0, -2; (3,2)]", "[0, 1; (2,1), (7,3)]", "[0, -1; (4,3), (5,2)]",
      "[0, 3; (2,1), (3,1), (4,1), (5,4)]", "[0, -3; (5,4), (7,6)]",
      "[0, 2; (9,2), (11,5)]", "[0, 1; (12,7)]", "[0, -4; (8,3), (3,2), (5,1)]",
      "[0, -5; (2,1)]", "[0, 6; (3,2)]", "[0, -6; (4,1)]", "[0, 5; (5,3)]",
      "[0, -4; (7,2)]", "[0, 4; (9,4)]", "[0, -6; (11,3)]", "[0, 3; (12,11)]",
      "[0, 2; (2,1), (3,2), (5,3), (7,4)]", "[0, -2; (5,2), (7,6), (11,10)]",
      // genus 1
      "[1, 1;]", "[1, -1; (2,1)]", "[1, 2; (3,1)]", "[1, 0; (2,1), (3,2)]",
      "[1, -2; (5,3), (4,1)]", "[1, 3; (7,2)]", "[1, -4; (2,1), (3,1), (7,5)]",
      "[1, 0; (4,3), (6,5)]", "[1, 5; (9,5), (4,3)]",
      // genus 2
      "[2, 1;]", "[2, -1; (3,2), (5,3)]", "[2, 2; (2,1), (2,1)]",
      "[2, 0; (3,1), (4,3)]", "[2, -3; (6,5)]", "[2, 4; (5,2), (7,4), (9,8)]",
      "[2, 5; (8,5), (9,7)]", "[2, -2; (12,7), (2,1)]",
      "[2, -5; (3,1), (3,2), (3,1), (3,2)]",
      // genus 3
      "[3, 1;]", "[3, -2; (2,1), (5,2)]", "[3, 0; (4,1), (6,1)]",
      "[3, 2; (10,3), (12,5), (7,1)]", "[3, -1; (11,4)]",
      "[3, 5; (2,1), (3,2), (4,3), (5,4)]", "[3, -3; (10,7), (5,1)]",
      "[3, 4; (6,1), (10,9), (3,1)]", "[3, -6; (2,1), (4,1), (8,7), (12,1)]",
  };
  std::vector<SeifertData> out;
  for (const char* e : entries) out.push_back(parse_seifert(e));
  return out;
}

namespace detail {

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi,
                                long den_max, bool nonzero) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, den_max);
  for (;;) {
    const long n = num(rng);
    if (nonzero && n == 0) continue;
    return Rational(n, den(rng));
  }
}

inline CheckResult all_cases(const std::string& name, long cases) {
  return CheckResult{name, true, cases, ""};
}

inline CheckResult failed(const std::string& name, long cases, std::string detail) {
  return CheckResult{name, false, cases, std::move(detail)};
}

}  // namespace detail

// Exhaustive fast == direct agreement for every coprime pair with modulus
// <= alpha_limit, then randomized large moduli, then the oddness symmetry.
inline std::vector<CheckResult> check_dedekind(long alpha_limit = 200,
                                               int random_trials = 64) {
  std::vector<CheckResult> out;

  {
    long cases = 0;
    std::string detail_msg;
    for (long a = 1; a <= alpha_limit && detail_msg.empty(); ++a)
      for (long b = 0; b < a; ++b) {
        if (gcd(Integer(a), Integer(b)) != 1) continue;
        ++cases;
        const DedekindArgs args{Integer(a), Integer(b)};
        const Rational fast = dedekind_sum_fast(args);
        const Rational direct = dedekind_sum_direct(args);
        if (fast != direct) {
          detail_msg = "s(" + std::to_string(a) + "," + std::to_string(b) +
                       "): fast " + fast.to_string() + " != direct " +
                       direct.to_string();
          break;
        }
      }
    if (detail_msg.empty())
      out.push_back(detail::all_cases("dedekind/fast-equals-direct", cases));
    else
      out.push_back(detail::failed("dedekind/fast-equals-direct", cases, detail_msg));
  }

  {
    std::mt19937_64 rng(0x5e1f4a70);
    std::uniform_int_distribution<long> alpha_dist(alpha_limit + 1, 1000000);
    long done = 0;
    std::string detail_msg;
    for (int t = 0; t < random_trials; ++t) {
      const long a = alpha_dist(rng);
      std::uniform_int_distribution<long> beta_dist(1, a - 1);
      long b = beta_dist(rng);
      while (gcd(Integer(a), Integer(b)) != 1) b = b % (a - 1) + 1;
      const DedekindArgs args{Integer(a), Integer(b)};
      if (dedekind_sum_fast(args) != dedekind_sum_direct(args)) {
        detail_msg = "disagreement at alpha=" + std::to_string(a) +
                     " beta=" + std::to_string(b);
        break;
      }
      ++done;
    }
    if (detail_msg.empty())
      out.push_back(detail::all_cases("dedekind/random-large-moduli", done));
    else
      out.push_back(detail::failed("dedekind/random-large-moduli", done, detail_msg));
  }

  {
    long done = 0;
    std::string detail_msg;
    for (long a = 3; a <= 60 && detail_msg.empty(); ++a)
      for (long b = 1; b < a; ++b) {
        if (gcd(Integer(a), Integer(b)) != 1) continue;
        const Rational plus = dedekind_sum_fast(DedekindArgs{Integer(a), Integer(b)});
        const Rational minus = dedekind_sum_fast(DedekindArgs{Integer(a), Integer(-b)});
        ++done;
        if (plus != -minus) {
          detail_msg = "oddness fails at alpha=" + std::to_string(a) +
                       " beta=" + std::to_string(b);
          break;
        }
      }
    if (detail_msg.empty())
      out.push_back(detail::all_cases("dedekind/oddness", done));
    else
      out.push_back(detail::failed("dedekind/oddness", done, detail_msg));
  }
  return out;
}

// One catalog entry, one rank: recompute the homology report (which
// internally cross-checks the two orders), the determinant identity, the
// divisibility chain, and SNF invariance under reversal of rows/columns.
inline bool torsion_entry_agrees(const SeifertData& d, const TorusRank& n,
                                 std::string* why) {
  try {
    const TorsionReport rep = homology_report(d, n);

    for (std::size_t i = 0; i + 1 < rep.snf_diagonal.size(); ++i) {
      const Integer& a = rep.snf_diagonal[i];
      const Integer& b = rep.snf_diagonal[i + 1];
      if (a == 0 && b != 0) {
        if (why) *why = "zero before nonzero in SNF diagonal";
        return false;
      }
      if (a != 0 && b != 0 && b % a != 0) {
        if (why) *why = "divisibility chain broken: " + a.get_str() + " !| " + b.get_str();
        return false;
      }
    }

    const IntegerMatrix m = presentation_matrix(d);
    Rational expected = chern_number(d);
    for (const auto& cone : d.cones()) expected *= Rational(cone.alpha);
    if (Rational(Integer(abs(determinant(m)))) != expected.abs()) {
      if (why) *why = "presentation determinant mismatch";
      return false;
    }

    IntegerMatrix reversed(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        reversed.at(i, j) = m.at(m.rows() - 1 - i, m.cols() - 1 - j);
    if (smith_normal_form(m) != smith_normal_form(reversed)) {
      if (why) *why = "SNF changed under row/column reversal";
      return false;
    }
    return true;
  } catch (const std::exception& e) {
    if (why) *why = e.what();
    return false;
  }
}

inline std::vector<CheckResult> check_torsion(
    const std::vector<SeifertData>& catalog = builtin_catalog()) {
  std::vector<CheckResult> out;
  long cases = 0;
  std::string detail_msg;
  for (const auto& d : catalog) {
    for (long n = 1; n <= 3 && detail_msg.empty(); ++n) {
      std::string why;
      if (!torsion_entry_agrees(d, TorusRank(n), &why)) {
        detail_msg = render_seifert(d) + " N=" + std::to_string(n) + ": " + why;
        break;
      }
      ++cases;
    }
    if (!detail_msg.empty()) break;
  }
  if (detail_msg.empty())
    out.push_back(detail::all_cases("torsion/snf-vs-closed-form", cases));
  else
    out.push_back(detail::failed("torsion/snf-vs-closed-form", cases, detail_msg));
  return out;
}

inline std::vector<CheckResult> check_regularization(int trials = 1000) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(0x2b5d4e11);

  {
    long done = 0;
    std::string detail_msg;
    std::uniform_int_distribution<int> size_dist(1, 12);
    std::uniform_int_distribution<int> ker_dist(0, 4);
    for (int t = 0; t < trials && detail_msg.empty(); ++t) {
      std::vector<Rational> eig;
      const int sz = size_dist(rng);
      for (int i = 0; i < sz; ++i)
        eig.push_back(detail::random_rational(rng, 1, 40, 24, true));
      const Spectrum s(eig, ker_dist(rng));
      const Rational c = detail::random_rational(rng, 1, 30, 16, true);
      const ScalingIdentity id = scaling_check(s, c);
      if (!id.holds) detail_msg = "scaling law failed";  // unreachable: would throw
      const ScalingIdentity book = scaling_check(s, c, ZetaZeroMode::minus_kernel);
      if (book.zeta0 != -s.kernel_dim())
        detail_msg = "bookkeeping zeta(0) mode ignored the kernel";
      if (eta_finite(s.scaled(c)) != eta_finite(s))
        detail_msg = "eta changed under positive scaling";
      ++done;
    }
    if (detail_msg.empty())
      out.push_back(detail::all_cases("regularization/det-scaling-law", done));
    else
      out.push_back(detail::failed("regularization/det-scaling-law", done, detail_msg));
  }

  {
    // det' multiplicativity over disjoint unions of random spectra
    long done = 0;
    std::string detail_msg;
    std::uniform_int_distribution<int> size_dist(1, 8);
    for (int t = 0; t < 200 && detail_msg.empty(); ++t) {
      std::vector<Rational> a, b, both;
      for (int i = 0, n = size_dist(rng); i < n; ++i)
        a.push_back(detail::random_rational(rng, 1, 20, 12, true));
      for (int i = 0, n = size_dist(rng); i < n; ++i)
        b.push_back(detail::random_rational(rng, 1, 20, 12, true));
      both = a;
      both.insert(both.end(), b.begin(), b.end());
      if (det_prime(Spectrum(both, 0)) !=
          det_prime(Spectrum(a, 0)) * det_prime(Spectrum(b, 0)))
        detail_msg = "det' not multiplicative over disjoint union";
      ++done;
    }
    if (detail_msg.empty())
      out.push_back(detail::all_cases("regularization/det-multiplicative", done));
    else
      out.push_back(detail::failed("regularization/det-multiplicative", done, detail_msg));
  }

  {
    // the zeta-regularized constant product and its square
    long done = 0;
    std::string detail_msg;
    for (long p = 1; p <= 200 && detail_msg.empty(); ++p) {
      const SqrtRational v = regularized_constant_product(Rational(p));
      if (v.squared() != Rational(1, p)) detail_msg = "constant product broke at p=" + std::to_string(p);
      ++done;
    }
    if (detail_msg.empty())
      out.push_back(detail::all_cases("regularization/constant-product", done));
    else
      out.push_back(detail::failed("regularization/constant-product", done, detail_msg));
  }

  {
    // ledger of k-exponents vs the level exponent, across the catalog
    long done = 0;
    std::string detail_msg;
    for (const auto& d : builtin_catalog()) {
      for (long n = 1; n <= 5 && detail_msg.empty(); ++n) {
        if (k_power_ledger(d.genus(), TorusRank(n)) != m_exponent(d, TorusRank(n))) {
          detail_msg = "ledger != level exponent at " + render_seifert(d) +
                       " N=" + std::to_string(n);
          break;
        }
        ++done;
      }
      if (!detail_msg.empty()) break;
    }
    if (detail_msg.empty())
      out.push_back(detail::all_cases("regularization/k-power-ledger", done));
    else
      out.push_back(detail::failed("regularization/k-power-ledger", done, detail_msg));
  }
  return out;
}

// Framing and weight identities; runs as part of `check all`.
inline std::vector<CheckResult> check_framing() {
  std::vector<CheckResult> out;

  {
    long done = 0;
    std::string detail_msg;
    for (long n = 1; n <= 4 && detail_msg.empty(); ++n)
      for (long deg = -12; deg <= 12; ++deg) {
        const TorusRank rank(n);
        if (!(seifert_framing_phase(rank, circle_bundle_eta0(rank, deg)) ==
              framing_twist(rank, 3 - deg))) {
          detail_msg = "framing identity fails at N=" + std::to_string(n) +
                       " d=" + std::to_string(deg);
          break;
        }
        ++done;
      }
    if (detail_msg.empty())
      out.push_back(detail::all_cases("framing/circle-bundle-identity", done));
    else
      out.push_back(detail::failed("framing/circle-bundle-identity", done, detail_msg));
  }

  {
    long done = 0;
    std::string detail_msg;
    for (long n = 1; n <= 3 && detail_msg.empty(); ++n)
      for (long f1 = -6; f1 <= 6 && detail_msg.empty(); ++f1)
        for (long f2 = -6; f2 <= 6; ++f2) {
          const TorusRank rank(n);
          if (!(framing_twist(rank, f1) * framing_twist(rank, f2) ==
                framing_twist(rank, f1 + f2))) {
            detail_msg = "composition fails";
            break;
          }
          ++done;
        }
    if (detail_msg.empty())
      out.push_back(detail::all_cases("framing/twist-composition", done));
    else
      out.push_back(detail::failed("framing/twist-composition", done, detail_msg));
  }

  {
    // weight identity K_X^2 |Tors| = 1, eta0 linearity, denominator bound
    long done = 0;
    std::string detail_msg;
    for (const auto& d : builtin_catalog()) {
      for (long n = 1; n <= 3 && detail_msg.empty(); ++n) {
        const TorusRank rank(n);
        if (k_normalization(d, rank).squared() * Rational(torsion_order_closed(d, rank)) !=
            Rational(1)) {
          detail_msg = "weight identity fails at " + render_seifert(d);
          break;
        }
        if (eta0(d, rank).value != Rational(n) * eta0(d, TorusRank(1)).value) {
          detail_msg = "eta0 not linear in rank at " + render_seifert(d);
          break;
        }
        Integer bound = 12;
        for (const auto& cone : d.cones()) bound *= cone.alpha * cone.alpha;
        if (bound % eta0(d, rank).value.den() != 0) {
          detail_msg = "eta0 denominator bound fails at " + render_seifert(d);
          break;
        }
        ++done;
      }
      if (!detail_msg.empty()) break;
    }
    if (detail_msg.empty())
      out.push_back(detail::all_cases("framing/weight-and-eta-identities", done));
    else
      out.push_back(detail::failed("framing/weight-and-eta-identities", done, detail_msg));
  }
  return out;
}

inline std::vector<CheckResult> run_check_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "dedekind") {
    auto r = check_dedekind();
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || suite == "torsion") {
    auto r = check_torsion();
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || suite == "regularization") {
    auto r = check_regularization();
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all) {
    auto r = check_framing();
    out.insert(out.end(), r.begin(), r.end());
  }
  if (out.empty())
    throw std::invalid_argument("unknown check suite: " + suite);
  return out;
}

}  // namespace seifertcs
