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

#include "commlab/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "commlab/errors.hpp"

namespace commlab {

Rational reduce_mod_power(const Rational& u, Prime p, long n) {
  if (u.is_zero()) return 0;
  const long v = vp(u, p).value();
  const long k = std::max(0L, -v);
  if (n + k <= 0) return 0;  // u already lies in p^n Z_p
  // u * p^k = a / b with p not dividing b.
  const Rational scaled = u * power_of(p, k);
  mpz_class modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, static_cast<unsigned long>(n + k));
  mpz_class b_inv;
  const mpz_class den = scaled.denominator();
  if (mpz_invert(b_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) ==
      0) {
    throw std::logic_error("denominator not invertible modulo p^m");
  }
  mpz_class s = (scaled.numerator() * b_inv) % modulus;
  if (s < 0) s += modulus;
  return Rational(s) / power_of(p, k);
}

TreeVertex::TreeVertex(Prime p, long n, const Rational& u)
    : p_(p), n_(n), u_(reduce_mod_power(u, p, n)) {
  require_prime(p);
}

Mat2 TreeVertex::representative() const {
  return Mat2(power_of(p_, n_), u_, 0, 1);
}

std::string TreeVertex::str() const {
  return std::to_string(p_) + "^" + std::to_string(n_) + ":" + u_.str();
}

TreeVertex vertex_of(const Mat2& g, Prime p) {
  require_prime(p);
  // Column with the smaller bottom valuation becomes the pivot; column
  // operations over Z_p clear the other bottom entry.
  const bool swap = vp(g.a21(), p) < vp(g.a22(), p);
  const Rational& top = swap ? g.a11() : g.a12();
  const Rational& bottom = swap ? g.a21() : g.a22();
  const long n = vp(g.det(), p).value() - 2 * vp(bottom, p).value();
  return TreeVertex(p, n, top / bottom);
}

TreeVertex act(const Mat2& g, const TreeVertex& v) {
  return vertex_of(g * v.representative(), v.prime());
}

long distance(const TreeVertex& v, const TreeVertex& w) {
  if (v.prime() != w.prime()) {
    throw ParameterError("distance between vertices of different trees");
  }
  const Prime p = v.prime();
  const Mat2 m = v.representative().inverse() * w.representative();
  const long d = vp(m.det(), p).value() - 2 * m.min_entry_valuation(p);
  return d < 0 ? -d : d;
}

std::vector<TreeVertex> neighbors(const TreeVertex& v) {
  const Prime p = v.prime();
  const Mat2 rep = v.representative();
  std::vector<TreeVertex> out;
  out.reserve(p + 1);
  for (Prime k = 0; k < p; ++k) {
    out.push_back(vertex_of(rep * Mat2(static_cast<long>(p),
                                       static_cast<long>(k), 0, 1),
                            p));
  }
  out.push_back(vertex_of(rep * Mat2::diag(1, static_cast<long>(p)), p));
  return out;
}

std::vector<TreeVertex> ball(const TreeVertex& center, long radius) {
  std::set<TreeVertex> seen{center};
  std::vector<TreeVertex> frontier{center};
  for (long r = 0; r < radius; ++r) {
    std::vector<TreeVertex> next;
    for (const TreeVertex& v : frontier) {
      for (TreeVertex& w : neighbors(v)) {
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

long parity_ball_size(Prime p, long radius) {
  long total = 0;
  for (long k = radius; k >= 0; k -= 2) {
    long shell = 1;
    if (k > 0) {
      shell = static_cast<long>(p) + 1;
      for (long i = 1; i < k; ++i) shell *= static_cast<long>(p);
    }
    total += shell;
  }
  return total;
}

long translation_length(const Mat2& g, Prime p) {
  const Rational t = g.trace();
  if (t.is_zero()) return 0;
  const long v = vp(t.square() / g.det(), p).value();
  return v < 0 ? -v : 0;
}

std::string to_string(OrbitResult::Kind kind) {
  switch (kind) {
    case OrbitResult::Kind::kBounded:
      return "Bounded";
    case OrbitResult::Kind::kUnboundedWitness:
      return "UnboundedWitness";
    case OrbitResult::Kind::kInconclusive:
      return "Inconclusive";
  }
  return "?";
}

OrbitResult orbit_bounded(const Alphabet& alphabet, Prime p, long max_radius) {
  require_prime(p);
  if (max_radius < 1) throw ParameterError("max_radius must be at least 1");
  OrbitResult result;

  const TreeVertex v0 = TreeVertex::base(p);
  std::set<TreeVertex> seen{v0};
  std::deque<TreeVertex> queue{v0};
  bool escaped = false;
  while (!queue.empty() && !escaped) {
    const TreeVertex v = queue.front();
    queue.pop_front();
    for (uint8_t c = 0; c < 2 * alphabet.size(); ++c) {
      TreeVertex w = act(alphabet.letter_matrix(Letter{c}), v);
      if (seen.count(w) != 0) continue;
      const long d = distance(v0, w);
      result.explored_radius = std::max(result.explored_radius, d);
      if (d > max_radius) {
        escaped = true;
        break;
      }
      seen.insert(w);
      queue.push_back(std::move(w));
    }
  }
  if (!escaped) {
    result.kind = OrbitResult::Kind::kBounded;
    result.orbit.assign(seen.begin(), seen.end());
    return result;
  }

  // Iterative deepening keeps the witness search in shortlex order.
  const size_t max_len = static_cast<size_t>(2 * max_radius);
  for (size_t len = 1; len <= max_len && !result.witness; ++len) {
    for_each_word(alphabet, len, Word(),
                  [&](std::span<const Letter> letters, const Mat2& m) {
                    if (result.witness) return false;
                    if (letters.size() < len) return true;
                    if (!is_necklace_canonical(letters)) return true;
                    const long l = translation_length(m, p);
                    if (l > 0) {
                      result.witness = Word::from_reduced(
                          std::vector<Letter>(letters.begin(), letters.end()));
                      result.witness_translation_length = l;
                    }
                    return true;
                  });
  }
  result.kind = result.witness ? OrbitResult::Kind::kUnboundedWitness
                               : OrbitResult::Kind::kInconclusive;
  return result;
}

long busemann(const Mat2& g, Prime p) {
  if (!g.is_upper_triangular()) {
    throw ParameterError(g.str() + " does not fix the charted end");
  }
  return vp(g.a11(), p).value() - vp(g.a22(), p).value();
}

PigeonholeResult commutator_pigeonhole(const Mat2& x, const Mat2& y,
                                       const TreeVertex& v, Prime p,
                                       long n_max) {
  if (v.prime() != p) throw ParameterError("vertex lives on another tree");
  if (n_max < 2) throw ParameterError("n_max must be at least 2");
  if (act(y, v) != v) {
    throw ParameterError("y does not fix the vertex " + v.str());
  }
  PigeonholeResult result;
  TreeVertex point = act(x.inverse(), v);
  result.radius = distance(v, point);
  result.ball_bound = parity_ball_size(p, result.radius);

  std::map<TreeVertex, long> first_seen;
  bool found = false;
  for (long n = 0; n <= n_max; ++n) {
    auto [it, inserted] = first_seen.try_emplace(point, n);
    if (!inserted) {
      result.n1 = it->second;
      result.n2 = n;
      result.steps = n + 1;
      found = true;
      break;
    }
    point = act(y, point);
  }
  if (!found) {
    throw BoundExceeded("no repeat among y^n x^-1 v for n <= " +
                            std::to_string(n_max) + "; parity ball size is " +
                            std::to_string(result.ball_bound),
                        result.ball_bound);
  }
  result.z = commutator(x, power(y, result.n1 - result.n2));
  if (act(result.z, v) != v) {
    throw std::logic_error("pigeonhole commutator does not fix v");
  }
  return result;
}

}  // namespace commlab
