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
#include <optional>
#include <cstddef>
#include <string>

#include "tentlab/binary/exact_rational.hpp"

namespace tentlab {

// Layout of an unnormalized fixed-point binary word: p integer bits followed by
// q fractional bits, m = p + q in total.
struct PrecisionSpec {
  int p = 1;
  int q = 0;

  // Throws ConfigError unless p >= 1 and q >= 0.
  void validate() const;
  int total_bits() const { return p + q; }

  // Default layout for the domain [0, N]: p = ceil(log2(N + 1)) + 1.
  static PrecisionSpec for_domain(const ExactRational& N, int q);

  friend bool operator==(const PrecisionSpec&, const PrecisionSpec&) = default;
};

// A non-negative fixed-point binary number: magnitude * 2^-q with
// magnitude < 2^(p+q). Immutable.
class FixedBinary {
 public:
  // Zero in the given layout.
  explicit FixedBinary(PrecisionSpec spec);
  // Throws OverflowError when magnitude does not fit, DomainError when negative.
  FixedBinary(PrecisionSpec spec, mpz_class magnitude);

  const PrecisionSpec& spec() const { return spec_; }
  const mpz_class& magnitude() const { return magnitude_; }

  bool is_zero() const { return sgn(magnitude_) == 0; }

  // "IIII.FFFF" with exactly p integer digits and q fractional digits; the
  // point is omitted when q == 0.
  std::string bit_string() const;

  // Values compare exactly, even across different layouts.
  friend bool operator==(const FixedBinary& a, const FixedBinary& b);
  friend std::strong_ordering operator<=>(const FixedBinary& a, const FixedBinary& b);

 private:
  PrecisionSpec spec_;
  mpz_class magnitude_;
};

enum class IntegerClass { kNotInteger, kOddInteger, kEvenInteger };

const char* to_string(IntegerClass c);

// The round-off map: largest grid value <= x (truncation toward zero).
// Throws OverflowError when x >= 2^p.
FixedBinary round_off(const ExactRational& x, PrecisionSpec spec);

// Exact shift of the binary point one place right. Throws OverflowError when
// 2x does not fit.
FixedBinary double_value(const FixedBinary& x);

// n - x on the grid of x. n must be exactly representable in x's layout
// (DomainError otherwise); a negative result is a DomainError.
FixedBinary subtract_from(const ExactRational& n, const FixedBinary& x);
FixedBinary subtract_from(const FixedBinary& n, const FixedBinary& x);

// Integer iff all fractional bits are zero; parity from bit q.
IntegerClass classify_integer(const FixedBinary& x);

// Exact decimal expansion ("0.375", "67.19921875", "0").
std::string to_decimal_string(const FixedBinary& x);

ExactRational to_rational(const FixedBinary& x);

// True when x lies on the 2^-q grid and below 2^p.
bool is_representable(const ExactRational& x, PrecisionSpec spec);

// Index (0 = units bit) of the lowest set bit counted from the binary point:
// returns -k for a lowest set fractional bit at 2^-k, a value >= 0 for
// integers, and std::nullopt for zero.
std::optional<long> lowest_set_bit_position(const FixedBinary& x);

}  // namespace tentlab
