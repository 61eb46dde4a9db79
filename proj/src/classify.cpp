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

#include "commlab/classify.hpp"

#include "commlab/errors.hpp"

namespace commlab {
namespace {

ElementClass make(ElementKind kind, int order, const Rational& trace) {
  ElementClass c;
  c.kind = kind;
  c.order = order;
  c.trace = trace;
  return c;
}

// Elliptic/parabolic/identity split for an element already known to be
// bounded in the relevant sense, unimodular case.
ElementClass classify_unimodular_bounded(const Mat2& m) {
  const Rational t = m.trace();
  if (m.is_scalar()) {
    return make(ElementKind::kIdentity, m.is_identity() ? 1 : 2, t);
  }
  if (t == 2 || t == -2) return make(ElementKind::kParabolic, 0, t);
  if (t == 0) return make(ElementKind::kEllipticFiniteOrder, 4, t);
  if (t == 1) return make(ElementKind::kEllipticFiniteOrder, 6, t);
  if (t == -1) return make(ElementKind::kEllipticFiniteOrder, 3, t);
  return make(ElementKind::kEllipticInfiniteOrder, 0, t);
}

// Same split by s = tr^2/det, for bounded projective classes.
ElementClass classify_projective_bounded(const Mat2& m, const Rational& s) {
  const Rational t = m.trace();
  if (m.is_scalar()) return make(ElementKind::kIdentity, 1, t);
  if (s == 4) return make(ElementKind::kParabolic, 0, t);
  if (s == 0) return make(ElementKind::kEllipticFiniteOrder, 2, t);
  if (s == 1) return make(ElementKind::kEllipticFiniteOrder, 3, t);
  if (s == 2) return make(ElementKind::kEllipticFiniteOrder, 4, t);
  if (s == 3) return make(ElementKind::kEllipticFiniteOrder, 6, t);
  return make(ElementKind::kEllipticInfiniteOrder, 0, t);
}

}  // namespace

std::string to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::kIdentity:
      return "Identity";
    case ElementKind::kEllipticFiniteOrder:
      return "EllipticFiniteOrder";
    case ElementKind::kEllipticInfiniteOrder:
      return "EllipticInfiniteOrder";
    case ElementKind::kParabolic:
      return "Parabolic";
    case ElementKind::kLoxodromic:
      return "Loxodromic";
  }
  return "?";
}

ElementClass classify_real(const Mat2& m) {
  if (m.det() != 1) {
    throw ParameterError("classify_real needs det = 1, got det " +
                         m.det().str());
  }
  const Rational t = m.trace();
  if (t.abs() > 2) return make(ElementKind::kLoxodromic, 0, t);
  return classify_unimodular_bounded(m);
}

ElementClass classify_real_projective(const Mat2& m) {
  const Rational d = m.det();
  if (d == 1) return classify_real(m);
  const Rational t = m.trace();
  if (d.sign() < 0) {
    if (t.is_zero()) return make(ElementKind::kEllipticFiniteOrder, 2, t);
    return make(ElementKind::kLoxodromic, 0, t);
  }
  const Rational s = t.square() / d;
  if (s > 4) return make(ElementKind::kLoxodromic, 0, t);
  return classify_projective_bounded(m, s);
}

ElementClass classify_padic(const Mat2& m, Prime p) {
  require_prime(p);
  const Rational d = m.det();
  const Rational t = m.trace();
  const Valuation v = vp(t.square() / d, p);
  ElementClass c;
  if (!v.is_infinite() && v.value() < 0) {
    c = make(ElementKind::kLoxodromic, 0, t);
    c.translation_length = -v.value();
  } else if (d == 1) {
    c = classify_unimodular_bounded(m);
  } else {
    c = classify_projective_bounded(m, t.square() / d);
  }
  c.odd_determinant_valuation = vp(d, p).value() % 2 != 0;
  return c;
}

}  // namespace commlab
