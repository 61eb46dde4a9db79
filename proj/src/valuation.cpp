// Copyright 2026 The commlab Authors
//
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

#include "commlab/valuation.hpp"

#include <stdexcept>

#include "commlab/errors.hpp"

namespace commlab {

long Valuation::value() const {
  if (!value_) throw std::logic_error("valuation is infinite");
  return *value_;
}

std::string Valuation::str() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(*a.value_ + *b.value_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return *a.value_ <=> *b.value_;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(Prime p) {
  if (!is_prime(p)) {
    throw ParameterError(std::to_string(p) + " is not prime");
  }
}

long vp_integer(const mpz_class& n, Prime p) {
  if (n == 0) throw std::logic_error("vp_integer of zero");
  mpz_class rest;
  mpz_class prime(p);
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Valuation vp(const Rational& x, Prime p) {
  require_prime(p);
  if (x.is_zero()) return Valuation::infinity();
  return Valuation(vp_integer(x.numerator(), p) -
                   vp_integer(x.denominator(), p));
}

std::vector<Prime> prime_factors(const mpz_class& n) {
  if (n == 0) throw std::logic_error("prime_factors of zero");
  mpz_class rest = ::abs(n);
  std::vector<Prime> out;
  for (unsigned long d = 2; rest > 1; ++d) {
    if (mpz_class(d) * d > rest) {
      if (!rest.fits_ulong_p()) {
        throw std::runtime_error("prime factor exceeds machine word");
      }
      out.push_back(rest.get_ui());
      break;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      out.push_back(d);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) rest /= d;
    }
  }
  return out;
}

}  // namespace commlab
