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

#ifndef COMMLAB_MAT2_HPP_
#define COMMLAB_MAT2_HPP_

#include <array>
#include <cstddef>
#include <string>

#include "commlab/rational.hpp"
#include "commlab/valuation.hpp"

namespace commlab {

// Invertible 2x2 matrix over Q. Construction from entries rejects singular
// input with ParameterError, so every Mat2 value has nonzero determinant.
class Mat2 {
 public:
  Mat2(Rational a11, Rational a12, Rational a21, Rational a22);

  static Mat2 identity();
  static Mat2 diag(const Rational& d1, const Rational& d2);
  static Mat2 scalar(const Rational& lambda) { return diag(lambda, lambda); }

  const Rational& a11() const { return e_[0]; }
  const Rational& a12() const { return e_[1]; }
  const Rational& a21() const { return e_[2]; }
  const Rational& a22() const { return e_[3]; }
  // Row-major: 0 -> a11, 1 -> a12, 2 -> a21, 3 -> a22.
  const std::array<Rational, 4>& entries() const { return e_; }

  Rational det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  Rational trace() const { return e_[0] + e_[3]; }

  Mat2 inverse() const;
  Mat2 scaled(const Rational& lambda) const;

  bool is_scalar() const;
  bool is_identity() const;
  bool is_upper_triangular() const { return e_[2].is_zero(); }

  // The unique scalar multiple whose first nonzero row-major entry is 1.
  Mat2 projective_normal_form() const;
  bool projectively_equal(const Mat2& other) const;

  // Smallest valuation of the four entries (finite, since m != 0).
  long min_entry_valuation(Prime p) const;

  // Largest |m_ij - delta_ij|, the entrywise distance from the identity.
  Rational distance_from_identity() const;

  // "[[a,b],[c,d]]" with entries as reduced fractions.
  std::string str() const;

  size_t hash() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  Mat2& operator*=(const Mat2& other) { return *this = *this * other; }

  friend bool operator==(const Mat2& a, const Mat2& b) = default;

 private:
  struct Unchecked {};
  Mat2(Unchecked, Rational a11, Rational a12, Rational a21, Rational a22);

  std::array<Rational, 4> e_;
};

// Free-function spellings used across the modules.
inline Mat2 projective_normalize(const Mat2& m) {
  return m.projective_normal_form();
}

// m^k for any integer k.
Mat2 power(const Mat2& m, long k);

// [x, y] = x y x^-1 y^-1.
Mat2 commutator(const Mat2& x, const Mat2& y);

struct Mat2Hash {
  size_t operator()(const Mat2& m) const noexcept { return m.hash(); }
};

}  // namespace commlab

#endif  // COMMLAB_MAT2_HPP_
