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

#include "tentlab/binary/exact_rational.hpp"

#include <algorithm>
#include <string>

#include "tentlab/errors.hpp"

namespace tentlab {
namespace {

void require_non_negative(const mpq_class& v, const char* what) {
  if (sgn(v) < 0) throw DomainError(std::string(what) + ": negative value");
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

ExactRational::ExactRational(std::int64_t n) {
  if (n < 0) throw DomainError("ExactRational: negative value");
  // mpz has no int64 constructor on every platform; go through the string.
  value_ = mpq_class(mpz_class(std::to_string(n)));
}

ExactRational::ExactRational(mpq_class v) : value_(std::move(v)) {
  value_.canonicalize();
  require_non_negative(value_, "ExactRational");
}

ExactRational::ExactRational(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) throw DomainError("ExactRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
  require_non_negative(value_, "ExactRational");
}

ExactRational ExactRational::dyadic(const mpz_class& m, std::size_t shift) {
  ExactRational r;
  mpq_set_z(r.value_.get_mpq_t(), m.get_mpz_t());
  mpq_div_2exp(r.value_.get_mpq_t(), r.value_.get_mpq_t(), shift);
  require_non_negative(r.value_, "ExactRational::dyadic");
  return r;
}

bool ExactRational::is_even_integer() const {
  return is_integer() && mpz_even_p(value_.get_num_mpz_t()) != 0;
}

bool ExactRational::is_dyadic() const {
  const mpz_class& d = value_.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

mpz_class ExactRational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string ExactRational::to_fraction_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  mpq_class r = value_ - rhs.value_;
  require_non_negative(r, "ExactRational subtraction");
  value_ = std::move(r);
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw DomainError("ExactRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational ExactRational::times_pow2(std::size_t k) const {
  ExactRational r;
  mpq_mul_2exp(r.value_.get_mpq_t(), value_.get_mpq_t(), k);
  return r;
}

ExactRational ExactRational::div_pow2(std::size_t k) const {
  ExactRational r;
  mpq_div_2exp(r.value_.get_mpq_t(), value_.get_mpq_t(), k);
  return r;
}

ExactRational abs_diff(const ExactRational& a, const ExactRational& b) {
  return a < b ? b - a : a - b;
}

ExactRational parse_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty decimal numeral");
  if (text.front() == '-') throw DomainError("negative numeral: " + std::string(text));

  const auto dot = text.find('.');
  const std::string_view int_part = text.substr(0, dot);
  const std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);

  const auto all_digits = [](std::string_view s) { return std::all_of(s.begin(), s.end(), is_digit); };
  if (!all_digits(int_part) || !all_digits(frac_part) || (int_part.empty() && frac_part.empty())) {
    throw ParseError("malformed decimal numeral: " + std::string(text));
  }

  mpz_class numerator(std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part), 10);
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac_part.size());
  return ExactRational(numerator, denominator);
}

std::optional<std::string> to_terminating_decimal(const ExactRational& x) {
  mpz_class d = x.denominator();
  const std::size_t twos = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), twos);
  std::size_t fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5) != 0) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
    ++fives;
  }
  if (d != 1) return std::nullopt;
  return to_decimal_approx(x, std::max(twos, fives));
}

std::string to_display_string(const ExactRational& x) {
  if (auto s = to_terminating_decimal(x)) return *s;
  return x.to_fraction_string();
}

std::string to_decimal_approx(const ExactRational& x, std::size_t max_fraction_digits) {
  const mpz_class whole = x.floor();
  std::string out = whole.get_str();
  if (max_fraction_digits == 0 || x.is_integer()) return out;

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, max_fraction_digits);
  // floor((x - whole) * 10^digits)
  mpz_class rem = x.numerator() - whole * x.denominator();
  mpz_class frac = rem * scale;
  mpz_fdiv_q(frac.get_mpz_t(), frac.get_mpz_t(), x.denominator().get_mpz_t());
  if (frac == 0) return out;

  std::string digits = frac.get_str();
  digits.insert(0, max_fraction_digits - digits.size(), '0');
  digits.erase(digits.find_last_not_of('0') + 1);
  return out + "." + digits;
}

std::size_t bits_to_hold(const ExactRational& x) {
  // 2^k > x  <=>  2^k > floor(x)
  const mpz_class f = x.floor();
  if (f == 0) return 0;
  return mpz_sizeinbase(f.get_mpz_t(), 2);
}

std::size_t hash_value(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t n = mpz_size(p);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t hash_value(const ExactRational& x) {
  const std::size_t h = hash_value(x.value().get_num());
  return h ^ (hash_value(x.value().get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace tentlab
