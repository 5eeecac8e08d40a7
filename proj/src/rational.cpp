#include "resistnet/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <ostream>

#include "resistnet/error.hpp"

namespace resistnet {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::ParseError, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw Error(Errc::ParseError, "non-finite value cannot be made exact");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(q);
}

namespace {

// 40 significant digits, then the C library rounds to the target format.
std::string decimal_text(const mpq_class& q) {
  mpf_class f(q, 192);
  mp_exp_t exp10 = 0;
  std::string digits = f.get_str(exp10, 10, 40);
  if (digits.empty()) return "0";
  const bool negative = digits[0] == '-';
  if (negative) digits.erase(0, 1);
  return (negative ? "-0." : "0.") + digits + "e" + std::to_string(exp10);
}

}  // namespace

double Rational::to_double() const { return std::strtod(decimal_text(q_).c_str(), nullptr); }

long double Rational::to_long_double() const { return std::strtold(decimal_text(q_).c_str(), nullptr); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::OutOfRange, "division by zero rational");
  q_ /= o.q_;
  return *this;
}

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

Rational parse_decimal(std::string_view text) {
  std::string mantissa(text);
  long exponent = 0;
  if (auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
    mpz_class exp_value;
    if (!parse_integer(std::string_view(mantissa).substr(e + 1), exp_value) ||
        !exp_value.fits_slong_p() || abs(exp_value) > 4000) {
      throw Error(Errc::ParseError, "bad exponent in number '" + std::string(text) + "'");
    }
    exponent = exp_value.get_si();
    mantissa.resize(e);
  }
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  mpz_class digits;
  if (!parse_integer(mantissa, digits)) {
    throw Error(Errc::ParseError, "not a number: '" + std::string(text) + "'");
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  return exponent >= 0 ? Rational(digits * scale, 1) : Rational(digits, scale);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::ParseError, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num, den;
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den)) {
      throw Error(Errc::ParseError, "bad fraction '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }
  mpz_class whole;
  if (parse_integer(text, whole)) return Rational(whole, 1);
  return parse_decimal(text);
}

Rational reciprocal(const Rational& r) { return Rational(1) / r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace resistnet
