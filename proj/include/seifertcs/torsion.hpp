#pragma once
// First homology of a Seifert fibration, two independent ways:
//
//   * Smith normal form of the presentation matrix coming from the
//     standard surgery description (rows: alpha_j q_j + beta_j h = 0,
//     sum q_j - n h = 0, with the 2g surface generators contributing
//     free summands only);
//   * the closed-form order |c1 * prod alpha_j| of the torsion subgroup.
//
// homology_report computes both, raised to the gauge-torus rank N, and
// refuses to return if they disagree.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "seifertcs/errors.hpp"
#include "seifertcs/rational.hpp"
#include "seifertcs/seifert.hpp"

namespace seifertcs {

class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Integer(0)) {}

  static IntegerMatrix from_rows(std::vector<std::vector<Integer>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c)
        throw std::invalid_argument("IntegerMatrix: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Integer> e_;
};

// (M+1) x (M+1) relation matrix over the cone generators q_1..q_M and the
// fiber class h; the free surface part is left out (it only contributes
// b_1 = 2g). M = 0 gives the 1x1 matrix [-n].
inline IntegerMatrix presentation_matrix(const SeifertData& d) {
  const std::size_t m = d.cones().size();
  IntegerMatrix a(m + 1, m + 1);
  for (std::size_t j = 0; j < m; ++j) {
    a.at(j, j) = d.cones()[j].alpha;
    a.at(j, m) = d.cones()[j].beta;
  }
  for (std::size_t j = 0; j < m; ++j) a.at(m, j) = 1;
  a.at(m, m) = -d.degree();
  return a;
}

// Smith normal form over the integers. Returns the diagonal d_1 | d_2 | ...
// (nonnegative, divisibility chain, zeros trailing). Pivot selection is by
// smallest nonzero absolute value; truncated division shrinks off-pivot
// entries strictly, so the inner loop terminates.
inline std::vector<Integer> smith_normal_form(IntegerMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t steps = rows < cols ? rows : cols;
  std::vector<Integer> diag(steps, Integer(0));

  for (std::size_t s = 0; s < steps; ++s) {
    for (;;) {
      // Smallest |entry| != 0 in the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = s, pj = s;
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j) {
          const Integer& v = a.at(i, j);
          if (v == 0) continue;
          if (!found || cmp(abs(v), abs(a.at(pi, pj))) < 0) {
            found = true;
            pi = i;
            pj = j;
          }
        }
      if (!found) return diag;  // trailing block vanished; zeros stay
      a.swap_rows(s, pi);
      a.swap_cols(s, pj);

      // Clear column s and row s by the pivot. Any nonzero remainder is
      // strictly smaller than the pivot, so we re-enter pivot selection.
      bool clean = true;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (a.at(i, s) == 0) continue;
        Integer q = a.at(i, s) / a.at(s, s);  // mpz truncated division
        for (std::size_t j = s; j < cols; ++j) a.at(i, j) -= q * a.at(s, j);
        if (a.at(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (a.at(s, j) == 0) continue;
        Integer q = a.at(s, j) / a.at(s, s);
        for (std::size_t i = s; i < rows; ++i) a.at(i, j) -= q * a.at(i, s);
        if (a.at(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: the pivot must divide the whole trailing block. If
      // some entry resists, fold its row into row s and keep reducing.
      bool divides = true;
      for (std::size_t i = s + 1; i < rows && divides; ++i)
        for (std::size_t j = s + 1; j < cols; ++j)
          if (a.at(i, j) % a.at(s, s) != 0) {
            for (std::size_t jj = s; jj < cols; ++jj) a.at(s, jj) += a.at(i, jj);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag[s] = abs(a.at(s, s));
  }
  return diag;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntegerMatrix a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer denom = 1;
  int sign = 1;
  for (std::size_t s = 0; s + 1 < n; ++s) {
    if (a.at(s, s) == 0) {
      std::size_t i = s + 1;
      while (i < n && a.at(i, s) == 0) ++i;
      if (i == n) return 0;
      a.swap_rows(s, i);
      sign = -sign;
    }
    for (std::size_t i = s + 1; i < n; ++i)
      for (std::size_t j = s + 1; j < n; ++j) {
        Integer t = a.at(i, j) * a.at(s, s) - a.at(i, s) * a.at(s, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
      }
    denom = a.at(s, s);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Integer(-a.at(n - 1, n - 1));
}

// |c1 * prod alpha_j|^N, the closed form for the torsion order of the
// rank-N theory. c1 * prod alpha_j is an integer by construction; a
// fractional value here would mean the formula itself is wrong.
inline Integer torsion_order_closed(const SeifertData& d, const TorusRank& n) {
  const Rational c1 = chern_number(d);
  if (c1 == 0)
    throw zero_chern_error(
        "torsion order is infinite when the orbifold Chern number vanishes");
  Rational scaled = c1;
  for (const auto& cone : d.cones()) scaled *= Rational(cone.alpha);
  if (!scaled.is_integer())
    throw std::logic_error("torsion_order_closed: non-integer c1 * prod alpha");
  return pow(Integer(abs(scaled.num())), static_cast<unsigned long>(n.value()));
}

struct TorsionReport {
  long betti;                         // rank of the free part per gauge circle: 2g
  std::vector<Integer> snf_diagonal;  // full SNF diagonal of the presentation
  Integer order_snf;                  // (prod of nonzero diagonal entries)^N
  Integer order_closed;               // |c1 * prod alpha|^N
  std::vector<Integer> group_structure;  // cyclic factors d_i > 1, each N times
};

// Computes the report and cross-checks the two order computations; a
// mismatch is a logic error, not an input error.
inline TorsionReport homology_report(const SeifertData& d, const TorusRank& n) {
  if (chern_number(d) == 0)
    throw zero_chern_error(
        "homology torsion subgroup is undefined when the orbifold Chern number "
        "vanishes");
  TorsionReport rep;
  rep.betti = 2 * d.genus();
  rep.snf_diagonal = smith_normal_form(presentation_matrix(d));

  Integer prod = 1;
  for (const auto& e : rep.snf_diagonal) {
    if (e == 0)
      throw std::logic_error("homology_report: singular presentation with c1 != 0");
    prod *= e;
  }
  rep.order_snf = pow(prod, static_cast<unsigned long>(n.value()));
  rep.order_closed = torsion_order_closed(d, n);
  if (rep.order_snf != rep.order_closed)
    throw std::logic_error("homology_report: Smith order " + rep.order_snf.get_str() +
                           " != closed-form order " + rep.order_closed.get_str());

  for (const auto& e : rep.snf_diagonal)
    if (e > 1)
      for (long i = 0; i < n.value(); ++i) rep.group_structure.push_back(e);
  return rep;
}

}  // namespace seifertcs
