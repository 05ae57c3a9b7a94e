#include <catch2/catch_amalgamated.hpp>

#include "seifertcs/checks.hpp"
#include "seifertcs/torsion.hpp"

using namespace seifertcs;

namespace {

std::vector<Integer> diag(std::vector<std::vector<Integer>> rows) {
  return smith_normal_form(IntegerMatrix::from_rows(std::move(rows)));
}

}  // namespace

TEST_CASE("presentation matrix layout") {
  const IntegerMatrix lens = presentation_matrix(parse_seifert("[0, 4;]"));
  REQUIRE(lens.rows() == 1);
  CHECK(lens.at(0, 0) == -4);

  const IntegerMatrix one_cone = presentation_matrix(parse_seifert("[0, 3; (5,2)]"));
  REQUIRE(one_cone.rows() == 2);
  CHECK(one_cone.at(0, 0) == 5);
  CHECK(one_cone.at(0, 1) == 2);
  CHECK(one_cone.at(1, 0) == 1);
  CHECK(one_cone.at(1, 1) == -3);
  CHECK(abs(determinant(one_cone)) == 17);  // |n*alpha + beta| = |c1*alpha|

  const IntegerMatrix poincare =
      presentation_matrix(parse_seifert("[0, -1; (2,1), (3,1), (5,1)]"));
  REQUIRE(poincare.rows() == 4);
  CHECK(abs(determinant(poincare)) == 1);
}

TEST_CASE("Smith normal form basics") {
  CHECK(diag({{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
  CHECK(diag({{1, 0}, {0, 0}}) == std::vector<Integer>{1, 0});
  CHECK(diag({{4}}) == std::vector<Integer>{4});
  CHECK(diag({{0, 0}, {0, 0}}) == std::vector<Integer>{0, 0});
  CHECK(diag({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}) == std::vector<Integer>{2, 2, 156});

  // idempotence on an existing divisibility chain
  CHECK(diag({{1, 0, 0}, {0, 2, 0}, {0, 0, 6}}) == std::vector<Integer>{1, 2, 6});
  CHECK(diag({{3, 0}, {0, 12}}) == std::vector<Integer>{3, 12});

  // signs and permutations do not matter
  CHECK(diag({{0, 3}, {2, 0}}) == std::vector<Integer>{1, 6});
  CHECK(diag({{-2, 0}, {0, -3}}) == std::vector<Integer>{1, 6});

  // non-square input
  CHECK(diag({{2, 0, 0}, {0, 4, 0}}) == std::vector<Integer>{2, 4});
}

TEST_CASE("exact determinant") {
  CHECK(determinant(IntegerMatrix::from_rows({{2, 3}, {4, 5}})) == -2);
  CHECK(determinant(IntegerMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(IntegerMatrix::from_rows(
            {{0, 2, 1}, {3, 0, 2}, {1, 1, 0}})) == 7);
  CHECK(determinant(IntegerMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(determinant(IntegerMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("closed-form torsion order") {
  CHECK(torsion_order_closed(parse_seifert("[0, 4;]"), TorusRank(1)) == 4);
  CHECK(torsion_order_closed(parse_seifert("[0, -1; (2,1), (3,1), (5,1)]"),
                             TorusRank(1)) == 1);
  CHECK(torsion_order_closed(parse_seifert("[1, 2; (3,1)]"), TorusRank(2)) == 49);
  CHECK_THROWS_AS(torsion_order_closed(parse_seifert("[3, 0;]"), TorusRank(1)),
                  zero_chern_error);
}

TEST_CASE("homology report ties the two order computations together") {
  const TorsionReport lens = homology_report(parse_seifert("[0, 4;]"), TorusRank(1));
  CHECK(lens.betti == 0);
  CHECK(lens.order_snf == 4);
  CHECK(lens.order_closed == 4);
  CHECK(lens.group_structure == std::vector<Integer>{4});

  const TorsionReport poincare =
      homology_report(parse_seifert("[0, -1; (2,1), (3,1), (5,1)]"), TorusRank(1));
  CHECK(poincare.order_closed == 1);
  CHECK(poincare.group_structure.empty());

  const TorsionReport rank2 = homology_report(parse_seifert("[1, 2; (3,1)]"), TorusRank(2));
  CHECK(rank2.betti == 2);
  CHECK(rank2.order_closed == 49);
  CHECK(rank2.group_structure == std::vector<Integer>{7, 7});

  const TorsionReport genus2 = homology_report(parse_seifert("[2, 1;]"), TorusRank(1));
  CHECK(genus2.betti == 4);
  CHECK(genus2.order_closed == 1);

  CHECK_THROWS_AS(homology_report(parse_seifert("[3, 0;]"), TorusRank(1)),
                  zero_chern_error);
}

TEST_CASE("oracle agreement across the catalog") {
  for (const auto& d : builtin_catalog())
    for (long n = 1; n <= 3; ++n) {
      std::string why;
      CAPTURE(render_seifert(d), n);
      CHECK(torsion_entry_agrees(d, TorusRank(n), &why));
      CHECK(why.empty());
    }
}
