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

// Conjugacy-class type of a single element, over R and over Q_p.
//
// Real case. For det(m) = 1 the class is read off the trace: |tr| < 2 is
// elliptic, |tr| = 2 is parabolic unless m = +-I, |tr| > 2 is loxodromic.
// An elliptic element with rational trace has finite order exactly when
// tr is 0, 1 or -1, since the only rational values of 2cos(2*pi*j/n) are
// 0, +-1, +-2 (Niven). The SL2 orders are 4, 6 and 3 respectively.
//
// PGL inputs use the conjugation-invariant s = tr^2/det instead, which
// avoids taking square roots: s < 4 elliptic, s = 4 parabolic, s > 4
// loxodromic. Finite projective orders are then s = 0, 1, 2, 3 giving
// 2, 3, 4, 6. Negative determinant means an orientation-reversing map:
// a reflection when tr = 0, otherwise a glide (reported as loxodromic).
//
// p-adic case. m is loxodromic on the Bruhat-Tits tree iff
// v_p(tr^2/det) < 0, and then translates its axis by -v_p(tr^2/det).

#ifndef COMMLAB_CLASSIFY_HPP_
#define COMMLAB_CLASSIFY_HPP_

#include <string>

#include "commlab/mat2.hpp"
#include "commlab/rational.hpp"
#include "commlab/valuation.hpp"

namespace commlab {

enum class ElementKind {
  kIdentity,
  kEllipticFiniteOrder,
  kEllipticInfiniteOrder,
  kParabolic,
  kLoxodromic,
};

struct ElementClass {
  ElementKind kind = ElementKind::kIdentity;
  // Order for kEllipticFiniteOrder (SL2 order when det = 1, projective order
  // otherwise). For kIdentity on -I this is 2.
  int order = 0;
  Rational trace;
  // p-adic only: translation length on the tree (0 unless loxodromic).
  long translation_length = 0;
  // p-adic only: v_p(det) odd, so a bounded element may fix only an edge
  // midpoint rather than a vertex.
  bool odd_determinant_valuation = false;

  bool infinite_order() const {
    return kind == ElementKind::kEllipticInfiniteOrder ||
           kind == ElementKind::kParabolic || kind == ElementKind::kLoxodromic;
  }
  bool bounded() const { return kind != ElementKind::kLoxodromic; }

  friend bool operator==(const ElementClass&, const ElementClass&) = default;
};

std::string to_string(ElementKind kind);

// det(m) must equal 1 (ParameterError otherwise).
ElementClass classify_real(const Mat2& m);

// Any invertible m, classified by tr^2/det.
ElementClass classify_real_projective(const Mat2& m);

ElementClass classify_padic(const Mat2& m, Prime p);

}  // namespace commlab

#endif  // COMMLAB_CLASSIFY_HPP_
