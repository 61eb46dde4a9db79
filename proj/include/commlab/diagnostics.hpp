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

// Group-level diagnostics for finitely generated subgroups of GL2(Q):
// where the group lives (place support), whether it is Zariski dense, which
// single-place projections are provably indiscrete, and scans for words of
// integral trace.

#ifndef COMMLAB_DIAGNOSTICS_HPP_
#define COMMLAB_DIAGNOSTICS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commlab/classify.hpp"
#include "commlab/mat2.hpp"
#include "commlab/parallel.hpp"
#include "commlab/tree.hpp"
#include "commlab/valuation.hpp"
#include "commlab/words.hpp"

namespace commlab {

inline constexpr char kConditionalPrefix[] =
    "conditional on the Greenberg–Shalom hypothesis";

struct PlaceSupport {
  std::vector<Prime> primes;  // sorted
  bool includes_real = true;
};

// Primes p with v_p < 0 on some entry of a generator or of its inverse.
PlaceSupport place_support(const Alphabet& alphabet);

struct DensityResult {
  enum class Verdict { kDense, kNotDense, kUnknown };
  enum class Reason { kNone, kReducible, kMonomial, kFinite, kNonUnimodular };
  Verdict verdict = Verdict::kUnknown;
  Reason reason = Reason::kNone;
  std::optional<Rational> commutator_trace;         // tr[g, h]
  std::optional<Rational> square_commutator_trace;  // tr[g^2, h^2]
  std::string detail;
};

std::string to_string(DensityResult::Verdict verdict);
std::string to_string(DensityResult::Reason reason);

// Zariski density of <g, h> in SL2, det g = det h = 1 (ParameterError
// otherwise). Irreducible iff tr[g,h] != 2. An irreducible pair fails to be
// dense only if it normalizes a split torus (preserves a pair of lines) or
// is finite. With both squares non-central that is tested by tr[g^2,h^2];
// when a square is central the candidate line pair is the eigenline pair of
// the other element, and preservation is checked on its defining quadratic
// form. Finiteness is settled by a projective closure capped at 200
// elements, above the order of any finite primitive subgroup of PGL2(C).
DensityResult zariski_dense(const Mat2& g, const Mat2& h);

// Two generators: the pair test. More: Dense if some pair of generators, or
// a product of two generators against a third, certifies density; otherwise
// Unknown. One generator is never dense. Non-unimodular input gives Unknown.
DensityResult zariski_dense(const Alphabet& alphabet);

struct TraceHit {
  Word word;
  Rational trace;
};

struct TraceScanResult {
  std::vector<Prime> primes;
  size_t max_len = 0;
  std::vector<TraceHit> hits;              // shortlex by word
  std::vector<uint64_t> classes_by_length;  // index = length, 0 unused
  std::vector<uint64_t> hits_by_length;
};

// Necklace-canonical nonempty words of length <= max_len whose trace has
// v_p >= 0 at every listed prime. Generators need det = +-1 so that the
// trace's valuations are constant on conjugacy-and-inversion classes.
TraceScanResult integral_trace_scan(const Alphabet& alphabet,
                                    const std::vector<Prime>& primes,
                                    size_t max_len,
                                    unsigned workers = worker_count());

struct PlaceStatus {
  enum class Kind { kIndiscreteWitness, kBoundedOrbit, kInconclusive, kDiscrete };
  std::optional<Prime> prime;  // nullopt for the real place
  Kind kind = Kind::kInconclusive;
  std::optional<Word> witness;
  std::optional<ElementClass> witness_class;
  std::string justification;
  std::optional<OrbitResult> orbit;  // p-adic places only
};

std::string to_string(PlaceStatus::Kind kind);

struct IrreducibilityReport {
  PlaceSupport support;
  std::vector<PlaceStatus> places;  // real place first, then primes ascending
  bool product_discrete = false;
  std::string product_justification;
  DensityResult density;
  std::vector<std::string> conditional_notes;
};

// Per place: an indiscreteness witness is an element of infinite order that
// lies in a compact subgroup, i.e. an elliptic of infinite order at the real
// place, or an infinite-order element of translation length 0 at p. Words
// searched are necklace-canonical, shortlex, up to max_len. When the
// alphabet is a Delta_q, pass q so the real place also reports the
// discreteness criteria for rational q.
IrreducibilityReport irreducibility_report(
    const Alphabet& alphabet, size_t max_len, long max_radius,
    const std::optional<Rational>& lu_parameter = std::nullopt);

struct ProbeReport {
  struct Check {
    bool passed = false;
    std::string witness;
  };
  Check loxodromic;   // (1) tr(g)^2 > 4
  Check dense;        // (2) <g,h> Zariski dense
  Check commutators;  // (3) c_0 = h, c_{k+1} = [c_k, g] shrink toward I
  Check unbounded;    // (4) positive translation length at p, length <= 6
  Rational trace_g;
  DensityResult density;
  std::vector<Rational> commutator_distances;  // max |c_k - I|, k = 0..iters
  std::optional<Word> unbounded_word;
  Rational unbounded_trace;
  long unbounded_translation_length = 0;
  bool all_passed = false;
  std::string message;  // set only when all four checks pass
};

inline constexpr char kProbeAllPassMessage[] =
    "candidate irreducible pair: finite index would follow from the "
    "two-generator finite-index theorem, conditional on the "
    "Greenberg–Shalom hypothesis";

// g, h with entries in Z[1/p] and det 1 (ParameterError otherwise). Check (3)
// passes when no c_k is the identity and max|c_k - I| strictly decreases at
// every step k = 1..iterations; this is evidence, not proof, of convergence.
ProbeReport two_gen_probe(const Mat2& g, const Mat2& h, Prime p,
                          int iterations);

}  // namespace commlab

#endif  // COMMLAB_DIAGNOSTICS_HPP_
