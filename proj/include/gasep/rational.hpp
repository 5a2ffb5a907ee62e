#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gasep {

/// Exact rational number. Values are always kept in lowest terms with a
/// positive denominator, and every operation is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  /// Parses "num" or "num/den" in base 10, e.g. "-8", "1/2".
  static Rational parse(std::string_view s);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
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

  Rational pow(unsigned e) const {
    Rational r(1), base = *this;
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  static Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
  }

  static Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
  }

  /// "num" when the value is an integer, "num/den" otherwise.
  std::string str() const {
    return is_integer() ? v_.get_num().get_str() : v_.get_str();
  }
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  try {
    mpz_class num(std::string(s.substr(0, slash)), 10);
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
      den = mpz_class(std::string(s.substr(slash + 1)), 10);
    }
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
  }
}

}  // namespace gasep
