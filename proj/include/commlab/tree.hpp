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

// The Bruhat-Tits tree of PGL(2, Q_p), restricted to what rational matrices
// can reach.
//
// A vertex is a homothety class of Z_p-lattices in Q_p^2. Every class has a
// unique representative spanned by the columns of
//
//     [[p^n, u],
//      [0,   1]]      n in Z,  u in Q taken modulo p^n Z_p,
//
// and u can always be chosen in Z[1/p] with 0 <= u * p^k < p^(n+k) for the
// least k >= 0 making u * p^k integral. This is the chart on which everything
// below is computed; the base vertex v0 (the standard lattice) is (0, 0).
// The height n is the Busemann function toward the end fixed by the upper
// triangular matrices, normalized so that v0 has height 0.

#ifndef COMMLAB_TREE_HPP_
#define COMMLAB_TREE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "commlab/mat2.hpp"
#include "commlab/rational.hpp"
#include "commlab/valuation.hpp"
#include "commlab/words.hpp"

namespace commlab {

class TreeVertex {
 public:
  // Reduces u modulo p^n.
  TreeVertex(Prime p, long n, const Rational& u);

  static TreeVertex base(Prime p) { return TreeVertex(p, 0, 0); }

  Prime prime() const { return p_; }
  long height() const { return n_; }
  const Rational& offset() const { return u_; }

  // [[p^n, u],[0, 1]].
  Mat2 representative() const;

  // "p^n:u", e.g. "2^-1:0" or "3^2:5/3".
  std::string str() const;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend auto operator<=>(const TreeVertex& a, const TreeVertex& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.u_ <=> b.u_;
  }

 private:
  Prime p_;
  long n_;
  Rational u_;
};

// Canonical representative of u modulo p^n Z_p.
Rational reduce_mod_power(const Rational& u, Prime p, long n);

// Class of the lattice spanned by the columns of g, i.e. g . v0.
TreeVertex vertex_of(const Mat2& g, Prime p);

// g . v.
TreeVertex act(const Mat2& g, const TreeVertex& v);

// |v_p(det M) - 2 min_ij v_p(M_ij)| for M = rep(v)^-1 rep(w).
long distance(const TreeVertex& v, const TreeVertex& w);

// The p + 1 vertices adjacent to v.
std::vector<TreeVertex> neighbors(const TreeVertex& v);

// All vertices within `radius` of center, sorted.
std::vector<TreeVertex> ball(const TreeVertex& center, long radius);

// Vertices within `radius` of a vertex whose distance from it has the same
// parity as `radius`: 1 + (p+1)(p^r - 1)/(p - 1) summed over matching shells.
long parity_ball_size(Prime p, long radius);

// max(0, -v_p(tr^2/det)).
long translation_length(const Mat2& g, Prime p);

struct OrbitResult {
  enum class Kind { kBounded, kUnboundedWitness, kInconclusive };
  Kind kind = Kind::kInconclusive;
  std::vector<TreeVertex> orbit;  // kBounded: the full orbit of v0, sorted
  std::optional<Word> witness;    // kUnboundedWitness
  long witness_translation_length = 0;
  long explored_radius = 0;  // largest distance from v0 reached by the closure
};

std::string to_string(OrbitResult::Kind kind);

// Breadth-first closure of {v0} under the generators and their inverses,
// abandoned once it leaves the ball of radius max_radius. A finished closure
// is a finite orbit (Bounded). Otherwise necklace-canonical words up to
// length 2 * max_radius are searched shortlex for positive translation
// length; the first one found is the witness, and failing that the answer is
// Inconclusive.
OrbitResult orbit_bounded(const Alphabet& alphabet, Prime p, long max_radius);

// B(g) = v_p(g11) - v_p(g22) = height(g . v0) for upper triangular g.
long busemann(const Mat2& g, Prime p);

struct PigeonholeResult {
  long n1 = 0;
  long n2 = 0;
  Mat2 z = Mat2::identity();  // [x, y^(n1 - n2)], fixes v
  long radius = 0;            // d(v, x^-1 . v)
  long ball_bound = 0;        // parity_ball_size(p, radius)
  long steps = 0;             // number of orbit points visited
};

// For y fixing v, the points y^n x^-1 . v all sit at distance d(v, x^-1 v)
// from v, so two of them coincide within ball_bound + 1 steps. Returns the
// first repeat n1 < n2 and z = [x, y^(n1 - n2)], which fixes v. Throws
// ParameterError if y . v != v and BoundExceeded if no repeat occurs by n_max.
PigeonholeResult commutator_pigeonhole(const Mat2& x, const Mat2& y,
                                       const TreeVertex& v, Prime p,
                                       long n_max);

}  // namespace commlab

#endif  // COMMLAB_TREE_HPP_
