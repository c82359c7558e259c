// Copyright 2026 The flagcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLAGCERT_RATIONAL_HPP_
#define FLAGCERT_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagcert {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction, always stored reduced with a positive denominator.
///
/// Textual form is canonical: an integer ("3", "-2", "0") or "p/q" with
/// q > 1 and gcd(|p|, q) = 1. `parse` rejects every other spelling, so a
/// value has exactly one accepted representation.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT
  Rational(const BigInt& value) : value_(value) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
  }

  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
    const BigInt num = parse_integer(text.substr(0, slash), true);
    const BigInt den = parse_integer(text.substr(slash + 1), false);
    if (den <= 1) {
      throw std::invalid_argument("denominator must exceed 1 in \"" + std::string(text) + "\"");
    }
    const BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
    if (g != 1) {
      Rational reduced(num, den);
      throw std::invalid_argument("non-canonical rational \"" + std::string(text) + "\", must be \"" +
                                  reduced.to_string() + "\"");
    }
    return Rational(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  std::string to_string() const {
    const BigInt den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
  }

  double to_double() const { return value_.convert_to<double>(); }
  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  static BigInt parse_integer(std::string_view s, bool allow_sign) {
    const std::string original(s);
    bool negative = false;
    if (allow_sign && !s.empty() && s.front() == '-') {
      negative = true;
      s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("malformed rational \"" + original + "\"");
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed rational \"" + original + "\"");
    }
    if (s.size() > 1 && s.front() == '0') {
      throw std::invalid_argument("leading zero in rational \"" + original + "\"");
    }
    if (negative && s == "0") throw std::invalid_argument("negative zero in rational \"" + original + "\"");
    const BigInt v{std::string(s)};
    return negative ? BigInt(-v) : v;
  }

  boost::multiprecision::cpp_rational value_;
};

/// n! as an exact integer.
inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

/// n (n-1) ... (n-k+1); zero when k > n.
inline BigInt falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= (n - i);
  return r;
}

}  // namespace flagcert

#endif  // FLAGCERT_RATIONAL_HPP_
