#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace resistnet {

/// Arbitrary-precision fraction, always held in lowest terms with a positive
/// denominator. Thin value wrapper over mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT: implicit by intent, mirrors integer literals
  Rational(int value) : q_(static_cast<long>(value)) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Exact value of a finite binary double; throws ParseError on inf/nan.
  static Rational from_double(double value);

  /// Accepts "p", "p/q", "-p/q" and decimal literals such as "0.25" or "1e-3".
  /// Decimal literals are converted exactly from their decimal digits.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  /// Nearest double.
  double to_double() const;
  long double to_long_double() const;
  std::string str() const { return q_.get_str(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

Rational reciprocal(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace resistnet
