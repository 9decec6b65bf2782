#include "cosegal/field.hpp"

#include <limits>

namespace cosegal {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) throw ShapeError("field characteristic " + std::to_string(p) + " is not prime");
  // products of two residues must fit in int64
  if (p > std::numeric_limits<std::int32_t>::max())
    throw ShapeError("field characteristic too large");
  return Field(p);
}

Field Field::of_characteristic(std::int64_t c) {
  return c == 0 ? rationals() : prime(c);
}

std::int64_t Field::reduce(const Rational& v) const {
  const BigInt p(p_);
  BigInt num = boost::multiprecision::numerator(v) % p;
  BigInt den = boost::multiprecision::denominator(v) % p;
  if (den == 0) throw ShapeError("denominator vanishes in " + name());
  auto n = reduce(num.convert_to<std::int64_t>());
  auto d = reduce(den.convert_to<std::int64_t>());
  return n * inverse(d) % p_;
}

std::int64_t Field::inverse(std::int64_t v) const {
  // extended Euclid
  std::int64_t a = reduce(v), m = p_, x0 = 1, x1 = 0;
  if (a == 0) throw std::domain_error("inverse of zero");
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return reduce(x0);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

std::string to_string(const Rational& r) {
  const auto& den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ShapeError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ShapeError("cannot parse rational '" + text + "'");
  }
}

}  // namespace cosegal
