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

#include "tentlab/binary/float_rounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tentlab/errors.hpp"

namespace tentlab {
namespace {

// floor(x * 2^-e) and whether the discarded remainder is >, =, < one half.
struct Scaled {
  mpz_class quotient;
  int half_cmp;  // sign of (2 * remainder - divisor)
};

Scaled scale(const ExactRational& x, long e) {
  mpz_class num = x.numerator();
  mpz_class den = x.denominator();
  if (e >= 0) {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  Scaled s;
  mpz_class rem;
  mpz_fdiv_qr(s.quotient.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  rem *= 2;
  s.half_cmp = cmp(rem, den);
  return s;
}

template <class T>
T round_nearest_even(const ExactRational& x) {
  using limits = std::numeric_limits<T>;
  constexpr int kDigits = limits::digits;                  // significand bits incl. hidden bit
  constexpr long kMinExp = limits::min_exponent - kDigits;  // exponent of the smallest subnormal ulp

  if (x.is_zero()) return T(0);

  // floor(log2 x) is bits(num) - bits(den) or one less.
  long lg = static_cast<long>(mpz_sizeinbase(x.numerator().get_mpz_t(), 2)) -
            static_cast<long>(mpz_sizeinbase(x.denominator().get_mpz_t(), 2));
  if (scale(x, lg).quotient == 0) --lg;

  long e = std::max(lg - (kDigits - 1), kMinExp);
  Scaled s = scale(x, e);
  mpz_class m = s.quotient;
  if (s.half_cmp > 0 || (s.half_cmp == 0 && mpz_odd_p(m.get_mpz_t()) != 0)) ++m;

  // m <= 2^kDigits, so the conversion and ldexp below are exact.
  const T mantissa = static_cast<T>(m.get_d());
  const T result = std::ldexp(mantissa, static_cast<int>(e));
  if (std::isinf(result)) throw OverflowError("value exceeds the largest finite floating-point number");
  return result;
}

template <class T>
ExactRational exact_of(T x) {
  if (!std::isfinite(x) || x < 0) throw DomainError("exact_value: non-finite or negative floating-point value");
  int exp = 0;
  const T frac = std::frexp(x, &exp);  // x = frac * 2^exp, frac in [0.5, 1)
  constexpr int kDigits = std::numeric_limits<T>::digits;
  const auto m = static_cast<long long>(std::ldexp(frac, kDigits));
  const long shift = static_cast<long>(kDigits) - exp;
  mpz_class mz(std::to_string(m));
  if (shift >= 0) return ExactRational::dyadic(mz, static_cast<std::size_t>(shift));
  return ExactRational(mz, 1).times_pow2(static_cast<std::size_t>(-shift));
}

}  // namespace

double to_binary64(const ExactRational& x) { return round_nearest_even<double>(x); }
float to_binary32(const ExactRational& x) { return round_nearest_even<float>(x); }

ExactRational exact_value(double x) { return exact_of(x); }
ExactRational exact_value(float x) { return exact_of(x); }

}  // namespace tentlab
