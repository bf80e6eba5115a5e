#include "ultrafract/rational.hpp"

#include <stdexcept>

namespace ufract {

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw std::domain_error("rational_pow: 0 to negative power");
  Rational acc(1);
  Rational b = exp > 0 ? base : Rational(1) / base;
  long e = exp > 0 ? exp : -exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    BigInt ip(head.empty() || head == "-" ? "0" : head);
    BigInt num = ip < 0 ? -ip : ip;
    BigInt den(1);
    for (char c : frac) {
      if (c < '0' || c > '9') throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rational r(num, den);
    return neg ? -r : r;
  }
  return Rational(BigInt(text));
}

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

bool is_power_of_two(const Rational& r, long& exponent) {
  if (r <= 0) return false;
  BigInt num = numerator(r), den = denominator(r);
  if (num == 1) {
    long k = 0;
    while (den % 2 == 0) { den /= 2; ++k; }
    if (den != 1) return false;
    exponent = -k;
    return true;
  }
  if (den == 1) {
    long k = 0;
    while (num % 2 == 0) { num /= 2; ++k; }
    if (num != 1) return false;
    exponent = k;
    return true;
  }
  return false;
}

}  // namespace ufract
