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

#ifndef COMMLAB_VALUATION_HPP_
#define COMMLAB_VALUATION_HPP_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "commlab/rational.hpp"

namespace commlab {

using Prime = unsigned long;

// A p-adic valuation: an integer, or Infinity (the valuation of zero).
// Infinity compares greater than every integer.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(long value) : value_(value) {}

  bool is_infinite() const { return !value_.has_value(); }
  // Throws std::logic_error on Infinity.
  long value() const;

  std::string str() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);

  friend bool operator==(const Valuation& a, const Valuation& b) = default;
  friend std::strong_ordering operator<=>(const Valuation& a,
                                          const Valuation& b);

 private:
  Valuation() = default;
  std::optional<long> value_;
};

bool is_prime(unsigned long n);

// Throws ParameterError unless p is prime.
void require_prime(Prime p);

// Exponent of p in x; Infinity iff x == 0.
Valuation vp(const Rational& x, Prime p);

// Exponent of p in a nonzero integer.
long vp_integer(const mpz_class& n, Prime p);

// Sorted distinct prime factors of |n| (n != 0). Trial division.
std::vector<Prime> prime_factors(const mpz_class& n);

}  // namespace commlab

#endif  // COMMLAB_VALUATION_HPP_
