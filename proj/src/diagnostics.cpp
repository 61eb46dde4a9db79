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

#include "commlab/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <set>
#include <unordered_set>

#include "commlab/errors.hpp"
#include "commlab/lu.hpp"

namespace commlab {

PlaceSupport place_support(const Alphabet& alphabet) {
  std::set<Prime> primes;
  for (const auto& g : alphabet.generators()) {
    for (const Mat2& m : {g.matrix, g.matrix.inverse()}) {
      for (const Rational& r : m.entries()) {
        for (Prime p : prime_factors(r.denominator())) primes.insert(p);
      }
    }
  }
  return PlaceSupport{{primes.begin(), primes.end()}, true};
}

std::string to_string(DensityResult::Verdict verdict) {
  switch (verdict) {
    case DensityResult::Verdict::kDense:
      return "Dense";
    case DensityResult::Verdict::kNotDense:
      return "NotDense";
    case DensityResult::Verdict::kUnknown:
      return "Unknown";
  }
  return "?";
}

std::string to_string(DensityResult::Reason reason) {
  switch (reason) {
    case DensityResult::Reason::kNone:
      return "none";
    case DensityResult::Reason::kReducible:
      return "reducible";
    case DensityResult::Reason::kMonomial:
      return "monomial";
    case DensityResult::Reason::kFinite:
      return "finite";
    case DensityResult::Reason::kNonUnimodular:
      return "non-unimodular";
  }
  return "?";
}

namespace {

// Coefficients (x^2, xy, y^2) of the binary form vanishing exactly on the
// eigenlines of k = [[a,b],[c,d]]: c x^2 + (d - a) x y - b y^2.
std::array<Rational, 3> eigenline_form(const Mat2& k) {
  return {k.a21(), k.a22() - k.a11(), -k.a12()};
}

// The same form precomposed with m, i.e. Q(m (x, y)).
std::array<Rational, 3> precompose(const std::array<Rational, 3>& q,
                                   const Mat2& m) {
  const Rational& al = m.a11();
  const Rational& be = m.a12();
  const Rational& ga = m.a21();
  const Rational& de = m.a22();
  return {q[0] * al * al + q[1] * al * ga + q[2] * ga * ga,
          q[0] * 2 * al * be + q[1] * (al * de + be * ga) + q[2] * 2 * ga * de,
          q[0] * be * be + q[1] * be * de + q[2] * de * de};
}

bool proportional(const std::array<Rational, 3>& x,
                  const std::array<Rational, 3>& y) {
  return x[0] * y[1] == x[1] * y[0] && x[0] * y[2] == x[2] * y[0] &&
         x[1] * y[2] == x[2] * y[1];
}

// Does m map the eigenline pair of k onto itself?
bool preserves_eigenlines(const Mat2& m, const Mat2& k) {
  const auto q = eigenline_form(k);
  return proportional(precompose(q, m.inverse()), q);
}

// Closure of <g, h> in PGL2, giving up past `cap` elements.
bool finite_closure(const Mat2& g, const Mat2& h, size_t cap) {
  const std::array<Mat2, 4> gens{g, g.inverse(), h, h.inverse()};
  std::unordered_set<Mat2, Mat2Hash> seen{Mat2::identity()};
  std::deque<Mat2> queue{Mat2::identity()};
  while (!queue.empty()) {
    const Mat2 x = queue.front();
    queue.pop_front();
    for (const Mat2& s : gens) {
      Mat2 y = (x * s).projective_normal_form();
      if (seen.insert(y).second) {
        if (seen.size() > cap) return false;
        queue.push_back(std::move(y));
      }
    }
  }
  return true;
}

DensityResult not_dense(DensityResult r, DensityResult::Reason reason,
                        std::string detail) {
  r.verdict = DensityResult::Verdict::kNotDense;
  r.reason = reason;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

DensityResult zariski_dense(const Mat2& g, const Mat2& h) {
  if (g.det() != 1 || h.det() != 1) {
    throw ParameterError("zariski_dense needs det = 1 generators");
  }
  DensityResult r;
  r.commutator_trace = commutator(g, h).trace();
  if (*r.commutator_trace == 2) {
    return not_dense(r, DensityResult::Reason::kReducible,
                     "tr[g,h] = 2: common eigenvector");
  }

  const Mat2 g2 = g * g;
  const Mat2 h2 = h * h;
  if (!g2.is_scalar() && !h2.is_scalar()) {
    r.square_commutator_trace = commutator(g2, h2).trace();
    if (*r.square_commutator_trace == 2) {
      return not_dense(r, DensityResult::Reason::kMonomial,
                       "tr[g^2,h^2] = 2: squares share an eigenvector");
    }
  } else {
    // A central square means trace 0; such an element swaps every line pair
    // it preserves, so the only candidate pair comes from the other element
    // (or from gh when both squares are central).
    const Mat2 k = !g2.is_scalar() ? g : !h2.is_scalar() ? h : g * h;
    if ((k * k).is_scalar()) {
      return not_dense(r, DensityResult::Reason::kFinite,
                       "tr g = tr h = tr gh = 0: quaternion-type group");
    }
    const bool parabolic = k.trace().square() == 4;
    if (!parabolic && preserves_eigenlines(g, k) &&
        preserves_eigenlines(h, k)) {
      return not_dense(r, DensityResult::Reason::kMonomial,
                       "both generators preserve the eigenline pair of " +
                           k.str());
    }
  }

  if (finite_closure(g, h, 200)) {
    return not_dense(r, DensityResult::Reason::kFinite,
                     "projective closure is finite");
  }
  r.verdict = DensityResult::Verdict::kDense;
  r.detail = "irreducible, not monomial, infinite";
  return r;
}

DensityResult zariski_dense(const Alphabet& alphabet) {
  DensityResult unknown;
  for (const auto& g : alphabet.generators()) {
    if (g.matrix.det() != 1) {
      unknown.reason = DensityResult::Reason::kNonUnimodular;
      unknown.detail = "generator " + g.name + " has det " +
                       g.matrix.det().str();
      return unknown;
    }
  }
  const size_t n = alphabet.size();
  if (n == 1) {
    DensityResult r;
    r.verdict = DensityResult::Verdict::kNotDense;
    r.reason = DensityResult::Reason::kReducible;
    r.detail = "cyclic group";
    return r;
  }
  if (n == 2) return zariski_dense(alphabet.matrix(0), alphabet.matrix(1));

  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      DensityResult r = zariski_dense(alphabet.matrix(i), alphabet.matrix(j));
      if (r.verdict == DensityResult::Verdict::kDense) {
        r.detail = "certified by the pair (" + alphabet.name(i) + ", " +
                   alphabet.name(j) + ")";
        return r;
      }
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      for (size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        DensityResult r = zariski_dense(alphabet.matrix(i) * alphabet.matrix(j),
                                        alphabet.matrix(k));
        if (r.verdict == DensityResult::Verdict::kDense) {
          r.detail = "certified by the pair (" + alphabet.name(i) +
                     alphabet.name(j) + ", " + alphabet.name(k) + ")";
          return r;
        }
      }
    }
  }
  unknown.detail = "no generator pair certifies density";
  return unknown;
}

TraceScanResult integral_trace_scan(const Alphabet& alphabet,
                                    const std::vector<Prime>& primes,
                                    size_t max_len, unsigned workers) {
  if (max_len < 1) throw ParameterError("max_len must be at least 1");
  for (Prime p : primes) require_prime(p);
  for (const auto& g : alphabet.generators()) {
    if (g.matrix.det().abs() != 1) {
      throw ParameterError("integral_trace_scan needs det = +-1 generators; " +
                           g.name + " has det " + g.matrix.det().str());
    }
  }

  struct Shard {
    std::vector<TraceHit> hits;
    std::vector<uint64_t> classes;
    std::vector<uint64_t> hit_counts;
  };
  const size_t codes = 2 * alphabet.size();
  auto shards = parallel_map<Shard>(codes, workers, [&](size_t c) {
    Shard s;
    s.classes.assign(max_len + 1, 0);
    s.hit_counts.assign(max_len + 1, 0);
    const Word prefix = Word::from_reduced({Letter{static_cast<uint8_t>(c)}});
    for_each_word(alphabet, max_len, prefix,
                  [&](std::span<const Letter> letters, const Mat2& m) {
                    if (!is_necklace_canonical(letters)) return true;
                    ++s.classes[letters.size()];
                    const Rational t = m.trace();
                    for (Prime p : primes) {
                      if (vp(t, p) < Valuation(0)) return true;
                    }
                    ++s.hit_counts[letters.size()];
                    s.hits.push_back(
                        {Word::from_reduced(std::vector<Letter>(
                             letters.begin(), letters.end())),
                         t});
                    return true;
                  });
    return s;
  });

  TraceScanResult result;
  result.primes = primes;
  std::sort(result.primes.begin(), result.primes.end());
  result.max_len = max_len;
  result.classes_by_length.assign(max_len + 1, 0);
  result.hits_by_length.assign(max_len + 1, 0);
  for (Shard& s : shards) {
    for (size_t n = 0; n <= max_len; ++n) {
      result.classes_by_length[n] += s.classes[n];
      result.hits_by_length[n] += s.hit_counts[n];
    }
    for (TraceHit& h : s.hits) result.hits.push_back(std::move(h));
  }
  std::sort(result.hits.begin(), result.hits.end(),
            [](const TraceHit& a, const TraceHit& b) {
              return shortlex_less(a.word, b.word);
            });
  return result;
}

std::string to_string(PlaceStatus::Kind kind) {
  switch (kind) {
    case PlaceStatus::Kind::kIndiscreteWitness:
      return "IndiscreteWitness";
    case PlaceStatus::Kind::kBoundedOrbit:
      return "BoundedOrbit";
    case PlaceStatus::Kind::kInconclusive:
      return "Inconclusive";
    case PlaceStatus::Kind::kDiscrete:
      return "Discrete";
  }
  return "?";
}

namespace {

// First necklace-canonical nonempty word (shortlex) satisfying `accept`.
std::optional<Word> first_canonical_word(
    const Alphabet& alphabet, size_t max_len,
    const std::function<bool(const Mat2&)>& accept) {
  std::optional<Word> found;
  for (size_t len = 1; len <= max_len && !found; ++len) {
    for_each_word(alphabet, len, Word(),
                  [&](std::span<const Letter> letters, const Mat2& m) {
                    if (found) return false;
                    if (letters.size() < len) return true;
                    if (is_necklace_canonical(letters) && accept(m)) {
                      found = Word::from_reduced(
                          std::vector<Letter>(letters.begin(), letters.end()));
                    }
                    return true;
                  });
  }
  return found;
}

PlaceStatus real_place(const Alphabet& alphabet, size_t max_len,
                       const std::optional<Rational>& q) {
  PlaceStatus s;
  if (q && q->abs() >= 4) {
    s.kind = PlaceStatus::Kind::kDiscrete;
    s.justification =
        "ping-pong certificate: Delta_q is free and discrete for |q| >= 4";
    return s;
  }
  std::string knapp_note;
  if (q) {
    const KnappResult k = knapp(*q);
    if (k.discrete) {
      s.kind = PlaceStatus::Kind::kDiscrete;
      s.justification = "rational-cosine criterion: 1 - |q|/2 = " +
                        k.cosine.str() + " = cos((n-2)pi/n) with n = " +
                        std::to_string(k.n);
      return s;
    }
    knapp_note = "rational-cosine criterion: 1 - |q|/2 = " + k.cosine.str() +
                 " is not cos((n-2)pi/n) for any n >= 3, so indiscrete; ";
  }
  s.witness = first_canonical_word(alphabet, max_len, [](const Mat2& m) {
    return classify_real_projective(m).kind ==
           ElementKind::kEllipticInfiniteOrder;
  });
  if (s.witness) {
    s.kind = PlaceStatus::Kind::kIndiscreteWitness;
    s.witness_class = classify_real_projective(evaluate(*s.witness, alphabet));
    s.justification = knapp_note + "elliptic of infinite order";
  } else {
    s.kind = PlaceStatus::Kind::kInconclusive;
    s.justification = knapp_note + "no elliptic of infinite order up to length " +
                      std::to_string(max_len);
  }
  return s;
}

PlaceStatus padic_place(const Alphabet& alphabet, size_t max_len,
                        long max_radius, Prime p) {
  PlaceStatus s;
  s.prime = p;
  s.orbit = orbit_bounded(alphabet, p, max_radius);
  s.witness = first_canonical_word(alphabet, max_len, [p](const Mat2& m) {
    return translation_length(m, p) == 0 &&
           classify_real_projective(m).infinite_order();
  });
  if (s.witness) {
    s.kind = PlaceStatus::Kind::kIndiscreteWitness;
    s.witness_class = classify_padic(evaluate(*s.witness, alphabet), p);
    s.justification =
        "infinite-order element with translation length 0 (in a compact "
        "stabilizer)";
  } else if (s.orbit->kind == OrbitResult::Kind::kBounded) {
    s.kind = PlaceStatus::Kind::kBoundedOrbit;
    s.justification = "orbit of the base vertex is finite";
  } else {
    s.kind = PlaceStatus::Kind::kInconclusive;
    s.justification =
        "no infinite-order stabilizer element up to length " +
        std::to_string(max_len);
  }
  return s;
}

}  // namespace

IrreducibilityReport irreducibility_report(
    const Alphabet& alphabet, size_t max_len, long max_radius,
    const std::optional<Rational>& lu_parameter) {
  if (max_len < 1) throw ParameterError("max_len must be at least 1");
  IrreducibilityReport report;
  report.support = place_support(alphabet);
  report.density = zariski_dense(alphabet);
  report.places.push_back(real_place(alphabet, max_len, lu_parameter));
  for (Prime p : report.support.primes) {
    report.places.push_back(padic_place(alphabet, max_len, max_radius, p));
  }

  // Generators and inverses have entries in Z[1/S] by construction of S, and
  // only finitely many such matrices have every entry bounded at every place
  // of S together with the real place.
  report.product_discrete = true;
  std::string s_list;
  for (Prime p : report.support.primes) {
    s_list += (s_list.empty() ? "" : ",") + std::to_string(p);
  }
  report.product_justification =
      "S-integer diagonal embedding: entries lie in Z[1/S], S = {" + s_list +
      "}; finitely many such matrices have bounded entries at every place of "
      "S and at the real place";

  const bool all_indiscrete =
      std::all_of(report.places.begin(), report.places.end(),
                  [](const PlaceStatus& s) {
                    return s.kind == PlaceStatus::Kind::kIndiscreteWitness;
                  });
  if (!report.support.primes.empty() && all_indiscrete &&
      report.density.verdict == DensityResult::Verdict::kDense) {
    report.conditional_notes.push_back(
        std::string(kConditionalPrefix) +
        ": discrete and Zariski dense in the product with every single-place "
        "projection indiscrete, so the group would be an irreducible lattice "
        "in the product over a minimal set of places");
  }
  return report;
}

ProbeReport two_gen_probe(const Mat2& g, const Mat2& h, Prime p,
                          int iterations) {
  require_prime(p);
  if (iterations < 1) throw ParameterError("iterations must be at least 1");
  for (const Mat2* m : {&g, &h}) {
    if (m->det() != 1) throw ParameterError("probe needs det = 1 matrices");
    for (const Rational& r : m->entries()) {
      const std::vector<Prime> f = prime_factors(r.denominator());
      if (f.size() > 1 || (f.size() == 1 && f[0] != p)) {
        throw ParameterError("entry " + r.str() + " is not in Z[1/" +
                             std::to_string(p) + "]");
      }
    }
  }

  ProbeReport report;
  report.trace_g = g.trace();
  report.loxodromic.passed = report.trace_g.square() > 4;
  report.loxodromic.witness = "tr(g) = " + report.trace_g.str();

  report.density = zariski_dense(g, h);
  report.dense.passed = report.density.verdict == DensityResult::Verdict::kDense;
  report.dense.witness = "tr[g,h] = " + report.density.commutator_trace->str() +
                         " (" + report.density.detail + ")";

  Mat2 c = h;
  bool decreasing = true;
  bool nontrivial = !c.is_identity();
  report.commutator_distances.push_back(c.distance_from_identity());
  for (int k = 1; k <= iterations; ++k) {
    c = commutator(c, g);
    nontrivial = nontrivial && !c.is_identity();
    report.commutator_distances.push_back(c.distance_from_identity());
    const auto& d = report.commutator_distances;
    decreasing = decreasing && d[d.size() - 1] < d[d.size() - 2];
  }
  report.commutators.passed = nontrivial && decreasing;
  std::string seq;
  for (const Rational& d : report.commutator_distances) {
    seq += (seq.empty() ? "" : ", ") + d.str();
  }
  report.commutators.witness = "max|c_k - I| = " + seq;

  const Alphabet pair({{"g", g}, {"h", h}});
  report.unbounded_word = first_canonical_word(
      pair, 6, [p](const Mat2& m) { return translation_length(m, p) > 0; });
  report.unbounded.passed = report.unbounded_word.has_value();
  if (report.unbounded_word) {
    const Mat2 m = evaluate(*report.unbounded_word, pair);
    report.unbounded_trace = m.trace();
    report.unbounded_translation_length = translation_length(m, p);
    report.unbounded.witness =
        format_word(*report.unbounded_word, pair) + ": trace " +
        report.unbounded_trace.str() + ", v_" + std::to_string(p) +
        "(trace) = " + vp(report.unbounded_trace, p).str() +
        ", translation length " +
        std::to_string(report.unbounded_translation_length);
  } else {
    report.unbounded.witness = "no word of length <= 6 translates";
  }

  report.all_passed = report.loxodromic.passed && report.dense.passed &&
                      report.commutators.passed && report.unbounded.passed;
  if (report.all_passed) report.message = kProbeAllPassMessage;
  return report;
}

}  // namespace commlab
