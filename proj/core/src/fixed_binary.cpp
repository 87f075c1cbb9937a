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

#include "tentlab/binary/fixed_binary.hpp"

#include <algorithm>
#include <string>

#include "tentlab/errors.hpp"

namespace tentlab {
namespace {

mpz_class pow2(std::size_t k) {
  mpz_class r;
  mpz_setbit(r.get_mpz_t(), k);
  return r;
}

std::string describe(const PrecisionSpec& s) {
  return "p=" + std::to_string(s.p) + ",q=" + std::to_string(s.q);
}

// Magnitudes of a and b aligned to the finer of the two grids.
std::pair<mpz_class, mpz_class> aligned(const FixedBinary& a, const FixedBinary& b) {
  const int q = std::max(a.spec().q, b.spec().q);
  mpz_class ma = a.magnitude();
  mpz_class mb = b.magnitude();
  mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), static_cast<mp_bitcnt_t>(q - a.spec().q));
  mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), static_cast<mp_bitcnt_t>(q - b.spec().q));
  return {ma, mb};
}

}  // namespace

void PrecisionSpec::validate() const {
  if (p < 1 || q < 0) throw ConfigError("invalid precision " + describe(*this) + ": need p >= 1, q >= 0");
}

PrecisionSpec PrecisionSpec::for_domain(const ExactRational& N, int q) {
  // smallest k with 2^k >= N + 1
  const ExactRational bound = N + ExactRational(1);
  int k = 0;
  while (ExactRational(pow2(static_cast<std::size_t>(k)), 1) < bound) ++k;
  PrecisionSpec s{k + 1, q};
  s.validate();
  return s;
}

FixedBinary::FixedBinary(PrecisionSpec spec) : spec_(spec), magnitude_(0) { spec_.validate(); }

FixedBinary::FixedBinary(PrecisionSpec spec, mpz_class magnitude)
    : spec_(spec), magnitude_(std::move(magnitude)) {
  spec_.validate();
  if (sgn(magnitude_) < 0) throw DomainError("FixedBinary: negative magnitude");
  if (mpz_sizeinbase(magnitude_.get_mpz_t(), 2) > static_cast<std::size_t>(spec_.total_bits()) &&
      sgn(magnitude_) != 0) {
    throw OverflowError("FixedBinary: value does not fit in " + describe(spec_));
  }
}

std::string FixedBinary::bit_string() const {
  const auto width = static_cast<std::size_t>(spec_.total_bits());
  std::string bits = is_zero() ? std::string() : magnitude_.get_str(2);
  bits.insert(0, width - bits.size(), '0');
  if (spec_.q > 0) bits.insert(static_cast<std::size_t>(spec_.p), 1, '.');
  return bits;
}

bool operator==(const FixedBinary& a, const FixedBinary& b) {
  if (a.spec_.q == b.spec_.q) return a.magnitude_ == b.magnitude_;
  const auto [ma, mb] = aligned(a, b);
  return ma == mb;
}

std::strong_ordering operator<=>(const FixedBinary& a, const FixedBinary& b) {
  const auto [ma, mb] = aligned(a, b);
  const int c = cmp(ma, mb);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

const char* to_string(IntegerClass c) {
  switch (c) {
    case IntegerClass::kNotInteger:
      return "not-integer";
    case IntegerClass::kOddInteger:
      return "odd-integer";
    case IntegerClass::kEvenInteger:
      return "even-integer";
  }
  return "?";
}

FixedBinary round_off(const ExactRational& x, PrecisionSpec spec) {
  spec.validate();
  // floor(x * 2^q)
  mpz_class scaled = x.numerator();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(spec.q));
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.denominator().get_mpz_t());
  if (scaled >= pow2(static_cast<std::size_t>(spec.total_bits()))) {
    throw OverflowError("round_off: " + to_display_string(x) + " >= 2^" + std::to_string(spec.p));
  }
  return FixedBinary(spec, std::move(scaled));
}

FixedBinary double_value(const FixedBinary& x) {
  mpz_class m = x.magnitude();
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), 1);
  return FixedBinary(x.spec(), std::move(m));
}

FixedBinary subtract_from(const ExactRational& n, const FixedBinary& x) {
  if (!is_representable(n, x.spec())) {
    throw DomainError("subtract_from: " + to_display_string(n) + " is not on the 2^-" +
                      std::to_string(x.spec().q) + " grid");
  }
  return subtract_from(round_off(n, x.spec()), x);
}

FixedBinary subtract_from(const FixedBinary& n, const FixedBinary& x) {
  if (n.spec().q != x.spec().q) throw DomainError("subtract_from: operands on different grids");
  if (n.magnitude() < x.magnitude()) throw DomainError("subtract_from: negative result");
  return FixedBinary(x.spec(), n.magnitude() - x.magnitude());
}

IntegerClass classify_integer(const FixedBinary& x) {
  const mpz_srcptr m = x.magnitude().get_mpz_t();
  if (mpz_sgn(m) == 0) return IntegerClass::kEvenInteger;
  const auto q = static_cast<mp_bitcnt_t>(x.spec().q);
  if (mpz_scan1(m, 0) < q) return IntegerClass::kNotInteger;
  return mpz_tstbit(m, q) != 0 ? IntegerClass::kOddInteger : IntegerClass::kEvenInteger;
}

std::string to_decimal_string(const FixedBinary& x) {
  // magnitude / 2^q terminates after at most q decimal places.
  return to_decimal_approx(to_rational(x), static_cast<std::size_t>(x.spec().q));
}

ExactRational to_rational(const FixedBinary& x) {
  return ExactRational::dyadic(x.magnitude(), static_cast<std::size_t>(x.spec().q));
}

bool is_representable(const ExactRational& x, PrecisionSpec spec) {
  spec.validate();
  const ExactRational scaled = x.times_pow2(static_cast<std::size_t>(spec.q));
  if (!scaled.is_integer()) return false;
  return x < ExactRational(pow2(static_cast<std::size_t>(spec.p)), 1);
}

std::optional<long> lowest_set_bit_position(const FixedBinary& x) {
  if (x.is_zero()) return std::nullopt;
  return static_cast<long>(mpz_scan1(x.magnitude().get_mpz_t(), 0)) - x.spec().q;
}

}  // namespace tentlab
