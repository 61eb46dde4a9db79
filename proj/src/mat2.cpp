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

#include "commlab/mat2.hpp"

#include <algorithm>
#include <sstream>

#include "commlab/errors.hpp"

namespace commlab {

Mat2::Mat2(Rational a11, Rational a12, Rational a21, Rational a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {
  if (det().is_zero()) throw ParameterError("singular matrix " + str());
}

Mat2::Mat2(Unchecked, Rational a11, Rational a12, Rational a21, Rational a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {}

Mat2 Mat2::identity() { return Mat2(Unchecked{}, 1, 0, 0, 1); }

Mat2 Mat2::diag(const Rational& d1, const Rational& d2) {
  return Mat2(d1, 0, 0, d2);
}

Mat2 Mat2::inverse() const {
  const Rational d = det();
  return Mat2(Unchecked{}, e_[3] / d, -e_[1] / d, -e_[2] / d, e_[0] / d);
}

Mat2 Mat2::scaled(const Rational& lambda) const {
  if (lambda.is_zero()) throw ParameterError("scaling by zero");
  return Mat2(Unchecked{}, e_[0] * lambda, e_[1] * lambda, e_[2] * lambda,
              e_[3] * lambda);
}

bool Mat2::is_scalar() const {
  return e_[1].is_zero() && e_[2].is_zero() && e_[0] == e_[3];
}

bool Mat2::is_identity() const { return is_scalar() && e_[0] == 1; }

Mat2 Mat2::projective_normal_form() const {
  const auto lead =
      std::find_if(e_.begin(), e_.end(),
                   [](const Rational& r) { return !r.is_zero(); });
  if (*lead == 1) return *this;
  return scaled(lead->inverse());
}

bool Mat2::projectively_equal(const Mat2& other) const {
  return projective_normal_form() == other.projective_normal_form();
}

long Mat2::min_entry_valuation(Prime p) const {
  Valuation best = Valuation::infinity();
  for (const Rational& r : e_) best = std::min(best, vp(r, p));
  return best.value();
}

Rational Mat2::distance_from_identity() const {
  Rational best = (e_[0] - 1).abs();
  best = std::max(best, e_[1].abs());
  best = std::max(best, e_[2].abs());
  best = std::max(best, (e_[3] - 1).abs());
  return best;
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[[" << e_[0] << "," << e_[1] << "],[" << e_[2] << "," << e_[3]
     << "]]";
  return os.str();
}

size_t Mat2::hash() const {
  size_t h = 0;
  for (const Rational& r : e_) h = h * 1000003 ^ r.hash();
  return h;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  const auto& a = x.e_;
  const auto& b = y.e_;
  return Mat2(Mat2::Unchecked{}, a[0] * b[0] + a[1] * b[2],
              a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
              a[2] * b[1] + a[3] * b[3]);
}

Mat2 power(const Mat2& m, long k) {
  Mat2 base = k < 0 ? m.inverse() : m;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Mat2 result = Mat2::identity();
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Mat2 commutator(const Mat2& x, const Mat2& y) {
  return x * y * x.inverse() * y.inverse();
}

}  // namespace commlab
