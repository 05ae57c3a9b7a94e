#pragma once
// Exact integer and rational arithmetic, backed by GMP. Rational keeps the
// invariant den > 0, gcd(num, den) = 1 at all times (canonicalized on entry),
// and refuses zero denominators instead of aborting the way raw mpq does.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>

namespace seifertcs {

using Integer = mpz_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

// Floor remainder, always in [0, |m|).
inline Integer floor_mod(const Integer& a, const Integer& m) {
  if (m == 0) throw std::domain_error("floor_mod: zero modulus");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                    // NOLINT: implicit by design
  Rational(const Integer& n) : v_(n) {}          // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Accepts "n" or "n/d", optional leading '-' or '+' on either part.
  static Rational parse(const std::string& text) {
    // mpz accepts a leading '-' but not '+'; strip one when it prefixes a digit.
    const auto integer = [](const std::string& s) {
      if (s.size() > 1 && s[0] == '+' &&
          std::isdigit(static_cast<unsigned char>(s[1])))
        return Integer(s.substr(1), 10);
      return Integer(s, 10);
    };
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(integer(text));
      return Rational(integer(text.substr(0, slash)),
                      integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::domain_error("Rational: cannot parse \"" + text + "\"");
    }
  }

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // Integer exponent; negative exponents require a nonzero base.
  Rational pow(long exponent) const {
    if (exponent == 0) return Rational(1);
    if (v_ == 0 && exponent < 0)
      throw std::domain_error("Rational: negative power of zero");
    const auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    Rational r(seifertcs::pow(num(), e), seifertcs::pow(den(), e));
    if (exponent < 0) r = Rational(1) / r;
    return r;
  }

  Integer floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
  }

  // Representative of *this mod m in [0, m), m a positive integer.
  Rational mod(long m) const {
    if (m <= 0) throw std::domain_error("Rational: nonpositive modulus");
    Rational scaled = *this / Rational(m);
    return *this - Rational(m) * Rational(scaled.floor());
  }

  // "num" when integral, "num/den" otherwise — the exact wire format.
  std::string to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
  }

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rational(const mpq_class& v) : v_(v) {}
  mpq_class v_;
};

}  // namespace seifertcs
