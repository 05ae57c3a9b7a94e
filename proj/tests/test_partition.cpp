#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "seifertcs/checks.hpp"
#include "seifertcs/partition.hpp"
#include "seifertcs/phase_file.hpp"

using namespace seifertcs;

namespace {

hp::Real abs_r(const hp::Real& x) { return x < 0 ? hp::Real(-x) : x; }

hp::Real tol(int digits) {
  return hp::Real(pow(hp::Real(10), -digits));
}

std::vector<BundleClassPhase> phases_for(const SeifertData& d, const TorusRank& n,
                                         const std::vector<Rational>& qs) {
  const auto labels = enumerate_bundle_classes(homology_report(d, n));
  REQUIRE(labels.size() == qs.size());
  std::vector<BundleClassPhase> out;
  for (std::size_t i = 0; i < labels.size(); ++i) out.emplace_back(labels[i], qs[i]);
  return out;
}

}  // namespace

TEST_CASE("bundle class enumeration") {
  const auto trivial =
      enumerate_bundle_classes(homology_report(parse_seifert("[2, 1;]"), TorusRank(1)));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].empty());

  const auto z4 =
      enumerate_bundle_classes(homology_report(parse_seifert("[0, 4;]"), TorusRank(1)));
  REQUIRE(z4.size() == 4);
  CHECK(z4[0] == std::vector<Integer>{0});
  CHECK(z4[3] == std::vector<Integer>{3});

  const auto z7sq =
      enumerate_bundle_classes(homology_report(parse_seifert("[1, 2; (3,1)]"), TorusRank(2)));
  REQUIRE(z7sq.size() == 49);
  CHECK(z7sq[0] == (std::vector<Integer>{0, 0}));
  CHECK(z7sq[1] == (std::vector<Integer>{0, 1}));   // last coordinate fastest
  CHECK(z7sq[48] == (std::vector<Integer>{6, 6}));
  // all distinct
  auto sorted = z7sq;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("per-class component factorization") {
  // L(4,1) at N=1, k=5: level part 5^{-1}, weight 1/2
  const SeifertData lens = parse_seifert("[0, 4;]");
  const BundleClassPhase zero({Integer(0)}, Rational(0));
  const PartitionComponent c = partition_component(lens, TorusRank(1), 5, zero, 0);
  CHECK(c.level_power == Rational(1, 5));
  CHECK(c.weight.as_rational() == Rational(1, 2));
  // q = 0, F = 0: only the eta term contributes; eta0 = 2/3
  CHECK(c.phase.q() == Rational(-1, 3).mod(2));

  // Poincaré sphere at k=1: phase is -eta0/2 = 91/360 mod 2
  const SeifertData poincare = parse_seifert("[0, -1; (2,1), (3,1), (5,1)]");
  const PartitionComponent p =
      partition_component(poincare, TorusRank(1), 1, BundleClassPhase({}, Rational(0)), 0);
  CHECK(p.phase.q() == Rational(91, 360));
  CHECK(p.level_power == Rational(1));
  CHECK(p.weight.as_rational() == Rational(1));

  CHECK_THROWS_AS(partition_component(lens, TorusRank(1), 0, zero, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      partition_component(parse_seifert("[3, 0;]"), TorusRank(1), 1, zero, 0),
      zero_chern_error);
}

TEST_CASE("trivial-phase magnitude hits the closed form") {
  hp::PrecisionGuard guard(60);  // reference values need more than ambient digits
  const SeifertData lens = parse_seifert("[0, 4;]");
  const auto report = homology_report(lens, TorusRank(1));
  const PartitionResult z =
      partition_sum(lens, TorusRank(1), 5, trivial_phases(report), 0);

  CHECK(z.k == 5);
  CHECK(z.m_exponent == Rational(-1));
  CHECK(z.moduli_volume == Rational(1));
  REQUIRE(z.per_class.size() == 4);
  for (const auto& row : z.per_class) {
    CHECK(row.weight.as_rational() == Rational(1, 2));
    CHECK(row.phase == z.per_class.front().phase);  // common phase
    CHECK(row.weight.squared() * Rational(report.order_closed) == Rational(1));
  }

  REQUIRE(z.magnitude_exact.has_value());
  CHECK(z.magnitude_exact->as_rational() == Rational(2, 5));
  CHECK(abs_r(z.magnitude - hp::to_real(Rational(2, 5))) < tol(45));
  REQUIRE(z.phase_over_pi.has_value());
}

TEST_CASE("uniform roots of unity cancel to zero") {
  const SeifertData lens = parse_seifert("[0, 4;]");
  const auto phases = phases_for(lens, TorusRank(1),
                                 {Rational(0), Rational(1, 4), Rational(2, 4), Rational(3, 4)});
  const PartitionResult z = partition_sum(lens, TorusRank(1), 1, phases, 0);
  CHECK(z.magnitude < tol(40));
  CHECK_FALSE(z.phase_over_pi.has_value());
  CHECK_FALSE(z.magnitude_exact.has_value());
}

TEST_CASE("single-class manifolds have |Z| = k^m regardless of the phase") {
  const SeifertData poincare = parse_seifert("[0, -1; (2,1), (3,1), (5,1)]");
  for (long k = 1; k <= 6; ++k) {
    const auto phases = phases_for(poincare, TorusRank(1), {Rational(5, 7)});
    const PartitionResult z = partition_sum(poincare, TorusRank(1), k, phases, 0);
    REQUIRE(z.magnitude_exact.has_value());
    CHECK(z.magnitude_exact->as_rational() == Rational(1, k));
  }
}

TEST_CASE("genus-1 level-1 trivial magnitude counts torsion") {
  // m = 0, so the magnitude is sqrt(|Tors|) on the nose
  const SeifertData d = parse_seifert("[1, 2; (3,1)]");
  const auto report = homology_report(d, TorusRank(1));
  CHECK(report.order_closed == 7);
  const PartitionResult z = partition_sum(d, TorusRank(1), 1, trivial_phases(report), 0);
  REQUIRE(z.magnitude_exact.has_value());
  CHECK(z.magnitude_exact->squared() == Rational(7));
  CHECK(abs_r(z.magnitude * z.magnitude - hp::to_real(Rational(7))) < tol(40));
}

TEST_CASE("phase lists must cover the classes exactly once") {
  const SeifertData lens = parse_seifert("[0, 4;]");
  const TorusRank one(1);

  std::vector<BundleClassPhase> short_list = {BundleClassPhase({Integer(0)}, Rational(0))};
  CHECK_THROWS_AS(partition_sum(lens, one, 1, short_list, 0), phase_assignment_error);

  std::vector<BundleClassPhase> dup = {
      BundleClassPhase({Integer(0)}, Rational(0)), BundleClassPhase({Integer(0)}, Rational(0)),
      BundleClassPhase({Integer(1)}, Rational(0)), BundleClassPhase({Integer(2)}, Rational(0))};
  CHECK_THROWS_AS(partition_sum(lens, one, 1, dup, 0), phase_assignment_error);

  std::vector<BundleClassPhase> out_of_range = {
      BundleClassPhase({Integer(0)}, Rational(0)), BundleClassPhase({Integer(1)}, Rational(0)),
      BundleClassPhase({Integer(2)}, Rational(0)), BundleClassPhase({Integer(5)}, Rational(0))};
  CHECK_THROWS_AS(partition_sum(lens, one, 1, out_of_range, 0), phase_assignment_error);

  std::vector<BundleClassPhase> wrong_shape = {
      BundleClassPhase({Integer(0), Integer(0)}, Rational(0)),
      BundleClassPhase({Integer(1), Integer(0)}, Rational(0)),
      BundleClassPhase({Integer(2), Integer(0)}, Rational(0)),
      BundleClassPhase({Integer(3), Integer(0)}, Rational(0))};
  CHECK_THROWS_AS(partition_sum(lens, one, 1, wrong_shape, 0), phase_assignment_error);
}

TEST_CASE("the two magnitude routes agree on random assignments") {
  std::mt19937_64 rng(0x9a27b3c5);
  const std::vector<std::string> manifolds = {
      "[0, 4;]", "[0, 5;]", "[1, 2; (3,1)]", "[0, -1; (2,1), (3,1), (5,1)]",
      "[0, -2; (3,2)]", "[2, 1;]", "[1, -1; (2,1)]"};
  std::uniform_int_distribution<long> k_dist(1, 7), n_dist(1, 2), den_dist(1, 24);

  for (int trial = 0; trial < 40; ++trial) {
    const SeifertData d = parse_seifert(manifolds[trial % manifolds.size()]);
    const TorusRank n(n_dist(rng));
    const long k = k_dist(rng);
    const auto labels = enumerate_bundle_classes(homology_report(d, n));
    std::vector<BundleClassPhase> phases;
    for (const auto& label : labels) {
      const long den = den_dist(rng);
      std::uniform_int_distribution<long> num_dist(0, den - 1);
      phases.emplace_back(label, Rational(num_dist(rng), den));
    }
    const PartitionResult z = partition_sum(d, n, k, phases, 0);
    const hp::Real direct = magnitude_formula(d, n, k, phases);
    CAPTURE(render_seifert(d), n.value(), k, trial);
    CHECK(abs_r(z.magnitude - direct) < tol(40));
  }
}

TEST_CASE("framing covariance and magnitude invariance") {
  const SeifertData d = parse_seifert("[0, 5;]");
  const TorusRank n(2);
  const auto report = homology_report(d, n);
  std::vector<Rational> qs;
  for (long j = 0; j < 25; ++j) qs.push_back(Rational(j % 7, 7));
  const auto phases = phases_for(d, n, qs);

  const PartitionResult base = partition_sum(d, n, 3, phases, 0);
  for (long f : {-7L, -1L, 1L, 5L, 12L, 24L}) {
    const PartitionResult twisted = partition_sum(d, n, 3, phases, f);
    CHECK(abs_r(twisted.magnitude - base.magnitude) < tol(40));
    for (std::size_t i = 0; i < base.per_class.size(); ++i)
      CHECK(twisted.per_class[i].phase ==
            base.per_class[i].phase * framing_twist(n, f));
  }
}

TEST_CASE("triangle bound with equality only at a common phase") {
  hp::PrecisionGuard guard(60);  // reference values need more than ambient digits
  const SeifertData lens = parse_seifert("[0, 4;]");
  const TorusRank one(1);
  const auto report = homology_report(lens, one);
  const hp::Real bound =
      hp::Real(hp::to_real(Rational(1, 5)) * sqrt(hp::to_real(Rational(4))));

  const PartitionResult equal_case =
      partition_sum(lens, one, 5, trivial_phases(report), 0);
  CHECK(abs_r(equal_case.magnitude - bound) < tol(40));

  const auto mixed = phases_for(lens, one,
                                {Rational(0), Rational(1, 3), Rational(0), Rational(0)});
  const PartitionResult mixed_case = partition_sum(lens, one, 5, mixed, 0);
  CHECK(mixed_case.magnitude < bound);
  CHECK_FALSE(mixed_case.magnitude_exact.has_value());
}

TEST_CASE("phase JSON parsing") {
  const auto good = parse_phase_json(
      R"([{"class": [0], "q": "0"}, {"class": [1], "q": "1/4"},
          {"class": [2], "q": "1/2"}, {"class": [3], "q": "-1/4"}])");
  REQUIRE(good.size() == 4);
  CHECK(good[1].q == Rational(1, 4));
  CHECK(good[3].q == Rational(3, 4));  // reduced mod 1
  CHECK(good[2].class_label == std::vector<Integer>{2});

  // integer q and string residues are accepted
  const auto alt = parse_phase_json(R"([{"class": ["11"], "q": 2}])");
  CHECK(alt[0].q == Rational(0));
  CHECK(alt[0].class_label == std::vector<Integer>{11});

  CHECK_THROWS_AS(parse_phase_json("not json"), phase_assignment_error);
  CHECK_THROWS_AS(parse_phase_json("{}"), phase_assignment_error);
  CHECK_THROWS_AS(parse_phase_json(R"([{"q": "1/2"}])"), phase_assignment_error);
  CHECK_THROWS_AS(parse_phase_json(R"([{"class": [0], "q": "1/x"}])"),
                  phase_assignment_error);
  CHECK_THROWS_AS(parse_phase_json(R"([{"class": [0.5], "q": "0"}])"),
                  phase_assignment_error);
  CHECK_THROWS_AS(load_phase_file("/nonexistent/path.json"), phase_assignment_error);
}

TEST_CASE("enumeration cap") {
  // 11^6 = 1771561 > 10^6 classes
  const SeifertData big = parse_seifert("[0, 11;]");
  const auto report = homology_report(big, TorusRank(6));
  CHECK_THROWS_AS(enumerate_bundle_classes(report), std::length_error);
}
