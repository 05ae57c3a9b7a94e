#pragma once
// Seifert fibration data over a closed orientable genus-g surface:
// base genus, integer degree of the bundle part, and exceptional fibers
// (alpha_j, beta_j) with alpha_j >= 1 and gcd(alpha_j, beta_j) = 1.
// Text form: "[g, n; (a1,b1), (a2,b2), ...]", cone list possibly empty.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "seifertcs/errors.hpp"
#include "seifertcs/rational.hpp"

namespace seifertcs {

struct Cone {
  Integer alpha;
  Integer beta;
  friend bool operator==(const Cone&, const Cone&) = default;
};

class SeifertData {
 public:
  SeifertData(long genus, Integer degree, std::vector<Cone> cones)
      : genus_(genus), degree_(std::move(degree)), cones_(std::move(cones)) {
    if (genus_ < 0) throw semantic_error("genus must be nonnegative");
    for (const auto& c : cones_) {
      if (c.alpha < 1)
        throw semantic_error("cone multiplicity must be at least 1, got " +
                             c.alpha.get_str());
      if (gcd(c.alpha, c.beta) != 1)
        throw semantic_error("cone pair (" + c.alpha.get_str() + "," +
                             c.beta.get_str() + ") is not coprime");
    }
  }

  long genus() const { return genus_; }
  const Integer& degree() const { return degree_; }
  const std::vector<Cone>& cones() const { return cones_; }

  friend bool operator==(const SeifertData&, const SeifertData&) = default;

 private:
  long genus_;
  Integer degree_;
  std::vector<Cone> cones_;
};

// Rank of the gauge torus. Always at least one.
class TorusRank {
 public:
  explicit TorusRank(long n) : n_(n) {
    if (n_ < 1) throw semantic_error("torus rank must be at least 1");
  }
  long value() const { return n_; }
  friend bool operator==(const TorusRank&, const TorusRank&) = default;

 private:
  long n_;
};

// Orbifold first Chern number c1 = n + sum beta_j / alpha_j.
inline Rational chern_number(const SeifertData& d) {
  Rational c(d.degree());
  for (const auto& cone : d.cones()) c += Rational(cone.beta, cone.alpha);
  return c;
}

// Folds multiplicity-1 cones into the integer degree; the fibration is
// unchanged. Cone order is otherwise preserved.
inline SeifertData normalize(const SeifertData& d) {
  Integer degree = d.degree();
  std::vector<Cone> kept;
  for (const auto& cone : d.cones()) {
    if (cone.alpha == 1)
      degree += cone.beta;
    else
      kept.push_back(cone);
  }
  return SeifertData(d.genus(), degree, std::move(kept));
}

inline std::string render_seifert(const SeifertData& d) {
  std::string out = "[" + std::to_string(d.genus()) + ", " + d.degree().get_str() + ";";
  bool first = true;
  for (const auto& cone : d.cones()) {
    out += first ? " (" : ", (";
    out += cone.alpha.get_str() + "," + cone.beta.get_str() + ")";
    first = false;
  }
  out += "]";
  return out;
}

namespace detail {

// Minimal recursive-descent helper over the bracket grammar above.
class SeifertScanner {
 public:
  explicit SeifertScanner(const std::string& text) : s_(text) {}

  SeifertData run() {
    expect('[');
    const long genus = small_integer("genus");
    expect(',');
    Integer degree = integer("degree");
    expect(';');
    std::vector<Cone> cones;
    skip_space();
    if (peek() != ']') {
      for (;;) {
        expect('(');
        Integer alpha = integer("cone multiplicity");
        expect(',');
        Integer beta = integer("cone twisting");
        expect(')');
        cones.push_back(Cone{std::move(alpha), std::move(beta)});
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(']');
    skip_space();
    if (pos_ != s_.size())
      throw parse_error("trailing input after closing bracket", pos_);
    return SeifertData(genus, std::move(degree), std::move(cones));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Integer integer(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits)
      throw parse_error(std::string("expected ") + what, start);
    return Integer(s_.substr(start, pos_ - start), 10);
  }

  long small_integer(const char* what) {
    const std::size_t at = pos_;
    Integer v = integer(what);
    if (!v.fits_slong_p())
      throw parse_error(std::string(what) + " out of range", at);
    return v.get_si();
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Throws parse_error on bad syntax, semantic_error on valid syntax
// describing invalid data (genus < 0, alpha < 1, non-coprime pair).
inline SeifertData parse_seifert(const std::string& text) {
  return detail::SeifertScanner(text).run();
}

}  // namespace seifertcs
