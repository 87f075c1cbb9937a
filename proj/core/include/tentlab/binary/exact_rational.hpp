// Copyright 2026 The tentlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tentlab {

// Non-negative arbitrary-precision rational, always kept in lowest terms.
//
// This is the carrier of "real" values: exact orbits, decimal inputs, and the
// exact value of every machine number produced by the finite backends.
// Negative values are rejected on construction, and subtraction that would go
// below zero throws DomainError.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  explicit ExactRational(mpq_class v);
  ExactRational(const mpz_class& numerator, const mpz_class& denominator);

  // Exact value of m * 2^-shift.
  static ExactRational dyadic(const mpz_class& m, std::size_t shift);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_even_integer() const;
  // True when the denominator is a power of two.
  bool is_dyadic() const;

  // floor(value)
  mpz_class floor() const;

  // "n" for integers, otherwise "n/d".
  std::string to_fraction_string() const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }

  // Multiplication and division by 2^k, which never change the reduced form
  // beyond the power of two in numerator or denominator.
  ExactRational times_pow2(std::size_t k) const;
  ExactRational div_pow2(std::size_t k) const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

// |a - b|
ExactRational abs_diff(const ExactRational& a, const ExactRational& b);

// Parses a non-negative decimal numeral ("67.2", "0.4", "100", "12.", ".5")
// exactly. No exponent, sign, or whitespace is accepted. Throws ParseError on
// malformed text and DomainError on a leading minus sign.
ExactRational parse_decimal(std::string_view text);

// Exact decimal expansion when the denominator has no prime factors other
// than 2 and 5, std::nullopt otherwise.
std::optional<std::string> to_terminating_decimal(const ExactRational& x);

// Terminating decimal when one exists, otherwise "n/d".
std::string to_display_string(const ExactRational& x);

// Decimal truncated toward zero after at most max_fraction_digits digits;
// trailing zeros are dropped. Used for CSV columns meant for plotting.
std::string to_decimal_approx(const ExactRational& x, std::size_t max_fraction_digits);

// Smallest k with 2^k > x, i.e. the integer bits needed to hold every value
// in [0, x].
std::size_t bits_to_hold(const ExactRational& x);

std::size_t hash_value(const mpz_class& z);
std::size_t hash_value(const ExactRational& x);

}  // namespace tentlab

template <>
struct std::hash<tentlab::ExactRational> {
  std::size_t operator()(const tentlab::ExactRational& x) const { return tentlab::hash_value(x); }
};
