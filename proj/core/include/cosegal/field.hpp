#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cosegal {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Raised for malformed input: shape mismatches, field mismatches, bad sizes.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A prime field F_p (characteristic p) or the rationals (characteristic 0).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  static Field prime(std::int64_t p);
  /// Accepts 0 or a prime; throws ShapeError otherwise.
  static Field of_characteristic(std::int64_t c);

  std::int64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  /// Canonical representative of an integer in F_p.
  std::int64_t reduce(std::int64_t v) const {
    std::int64_t r = v % p_;
    return r < 0 ? r + p_ : r;
  }
  /// Reduces an arbitrary rational into F_p; throws if the denominator vanishes.
  std::int64_t reduce(const Rational& v) const;
  std::int64_t inverse(std::int64_t v) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 2;
};

bool is_prime(std::int64_t n);

/// Text form used by serialization: "a" or "a/b".
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace cosegal
