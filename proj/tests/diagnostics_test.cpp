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


#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "commlab/diagnostics.hpp"
#include "commlab/errors.hpp"
#include "commlab/lu.hpp"
#include "commlab/report.hpp"
#include "naive_oracles.hpp"
#include "test_support.hpp"

namespace commlab {
namespace {

using testing::Rng;

bool has_prefix(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

TEST(PlaceSupport, Examples) {
  EXPECT_EQ(place_support(long_reid_generators()).primes, (std::vector<Prime>{2, 3}));
  EXPECT_EQ(place_support(lu_generators(Rational(1, 6))).primes, (std::vector<Prime>{2, 3}));
  EXPECT_TRUE(place_support(lu_generators(4)).primes.empty());
  EXPECT_TRUE(place_support(lu_generators(4)).includes_real);
  // An inverse can bring in a prime the generator itself hides: det 5.
  EXPECT_EQ(place_support(Alphabet({{"g", Mat2(1, 1, 1, 6)}})).primes,
            (std::vector<Prime>{5}));
}

TEST(PlaceSupport, InvariantUnderInversionAndPermutation) {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const Mat2 g = rng.invertible(12);
    const Mat2 h = rng.invertible(12);
    const auto base = place_support(Alphabet({{"g", g}, {"h", h}})).primes;
    EXPECT_EQ(place_support(Alphabet({{"h", h}, {"g", g}})).primes, base);
    EXPECT_EQ(place_support(Alphabet({{"g", g.inverse()}, {"h", h}})).primes, base);
  }
}

TEST(Density, Examples) {
  const Alphabet d = lu_generators(Rational(1, 2));
  const DensityResult r = zariski_dense(d.matrix(0), d.matrix(1));
  EXPECT_EQ(r.verdict, DensityResult::Verdict::kDense);
  EXPECT_EQ(*r.commutator_trace, Rational(9, 4));
  EXPECT_EQ(*r.square_commutator_trace, 6);

  const DensityResult bb = zariski_dense(Mat2(1, 1, 0, 1), Mat2(1, 2, 0, 1));
  EXPECT_EQ(bb.verdict, DensityResult::Verdict::kNotDense);
  EXPECT_EQ(bb.reason, DensityResult::Reason::kReducible);

  const DensityResult mono =
      zariski_dense(Mat2(0, 1, -1, 0), Mat2::diag(2, Rational(1, 2)));
  EXPECT_EQ(mono.verdict, DensityResult::Verdict::kNotDense);
  EXPECT_EQ(mono.reason, DensityResult::Reason::kMonomial);

  EXPECT_THROW(zariski_dense(Mat2::diag(2, 1), Mat2(1, 1, 0, 1)), ParameterError);
}

// With g^2 = -I the monomial test falls back to the eigenline form of h.
TEST(Density, CentralSquareFallback) {
  const Mat2 g(0, 1, -1, 0);
  Rng rng(34);
  for (int k = 0; k < 20; ++k) {
    const Mat2 c = rng.unimodular(4, 2);
    const Mat2 ci = c.inverse();
    const DensityResult mono = zariski_dense(c * g * ci, c * Mat2::diag(2, Rational(1, 2)) * ci);
    EXPECT_EQ(mono.reason, DensityResult::Reason::kMonomial);
    EXPECT_FALSE(mono.square_commutator_trace);
    // Symmetric h would be monomial here: a quarter turn swaps orthogonal lines.
    EXPECT_EQ(zariski_dense(c * g * ci, c * Mat2(2, 1, 3, 2) * ci).verdict,
              DensityResult::Verdict::kDense);
  }
  EXPECT_EQ(zariski_dense(g, Mat2(2, 1, 1, 1)).reason, DensityResult::Reason::kMonomial);
  // The pair generating SL2(Z).
  EXPECT_EQ(zariski_dense(Mat2(0, -1, 1, 0), Mat2(0, -1, 1, -1)).verdict,
            DensityResult::Verdict::kDense);
}

// The two-generator trace identity on 500 random unimodular pairs.
TEST(Density, CommutatorTraceIdentity) {
  Rng rng(32);
  for (int k = 0; k < 500; ++k) {
    const Mat2 g = rng.unimodular(6, 2);
    const Mat2 h = rng.unimodular(6, 2);
    const Rational x = g.trace(), y = h.trace(), z = (g * h).trace();
    EXPECT_EQ(commutator(g, h).trace(), x * x + y * y + z * z - x * y * z - 2);
  }
}

TEST(Density, LyndonUllmanCommutatorTrace) {
  Rng rng(33);
  for (int k = 0; k < 20; ++k) {
    const Rational q = rng.nonzero_rational(50);
    const Alphabet d = lu_generators(q);
    EXPECT_EQ(commutator(d.matrix(0), d.matrix(1)).trace(), q * q + 2);
    EXPECT_EQ(zariski_dense(d).verdict, DensityResult::Verdict::kDense);
  }
}

TEST(Density, Alphabets) {
  EXPECT_EQ(zariski_dense(long_reid_generators()).verdict, DensityResult::Verdict::kDense);
  EXPECT_EQ(zariski_dense(Alphabet({{"g", Mat2(1, 1, 0, 1)}})).verdict,
            DensityResult::Verdict::kNotDense);
  EXPECT_EQ(zariski_dense(Alphabet({{"g", Mat2::diag(2, 1)}, {"h", Mat2(1, 1, 0, 1)}})).reason,
            DensityResult::Reason::kNonUnimodular);
  // Three upper-triangular generators: no pair certifies density.
  const Alphabet tri({{"x", Mat2(1, 1, 0, 1)}, {"y", Mat2(1, 3, 0, 1)}, {"z", Mat2::diag(2, Rational(1, 2))}});
  EXPECT_EQ(zariski_dense(tri).verdict, DensityResult::Verdict::kUnknown);
}

TEST(TraceScan, LongReidShortTraces) {
  const Alphabet lr = long_reid_generators();
  EXPECT_EQ(lr.matrix(0).trace(), Rational(10, 3));
  EXPECT_EQ(lr.matrix(1).trace(), Rational(83, 8));
  EXPECT_EQ((lr.matrix(0) * lr.matrix(1)).trace(), Rational(91, 24));
  const TraceScanResult scan = integral_trace_scan(lr, {2, 3}, 2);
  for (const TraceHit& h : scan.hits) {
    EXPECT_NE(format_word(h.word, lr), "a");
    EXPECT_NE(format_word(h.word, lr), "b");
    EXPECT_NE(format_word(h.word, lr), "a b");
  }
}

TEST(TraceScan, VacuousWithoutPrimes) {
  const Alphabet d = lu_generators(4);
  const TraceScanResult scan = integral_trace_scan(d, {}, 4);
  uint64_t classes = 0;
  for (uint64_t c : scan.classes_by_length) classes += c;
  EXPECT_EQ(scan.hits.size(), classes);
  EXPECT_EQ(scan.hits_by_length, scan.classes_by_length);
}

std::set<Word> hit_set(const TraceScanResult& scan) {
  std::set<Word> out;
  for (const TraceHit& h : scan.hits) out.insert(h.word);
  return out;
}

TEST(TraceScan, MatchesNaiveOracle) {
  const Alphabet lr = long_reid_generators();
  const Alphabet d = lu_generators(Rational(1, 2));
  for (size_t len = 1; len <= 6; ++len) {
    EXPECT_EQ(hit_set(integral_trace_scan(lr, {2, 3}, len)),
              oracle::naive_integral_trace_classes(lr, {2, 3}, len));
    EXPECT_EQ(hit_set(integral_trace_scan(d, {2}, len)),
              oracle::naive_integral_trace_classes(d, {2}, len));
  }
}

TEST(TraceScan, DeterministicAcrossThreadCounts) {
  const Alphabet lr = long_reid_generators();
  const TraceScanResult one = integral_trace_scan(lr, {2, 3}, 6, 1);
  const TraceScanResult four = integral_trace_scan(lr, {2, 3}, 6, 4);
  ASSERT_EQ(one.hits.size(), four.hits.size());
  for (size_t i = 0; i < one.hits.size(); ++i) {
    EXPECT_EQ(one.hits[i].word, four.hits[i].word);
  }
  EXPECT_EQ(one.classes_by_length, four.classes_by_length);
  EXPECT_THROW(integral_trace_scan(lr, {2, 3}, 0), ParameterError);
  EXPECT_THROW(integral_trace_scan(lr, {4}, 2), ParameterError);
}

void expect_witness_reverifies(const PlaceStatus& s, const Alphabet& alphabet) {
  if (s.kind != PlaceStatus::Kind::kIndiscreteWitness) return;
  ASSERT_TRUE(s.witness);
  const Mat2 m = evaluate(*s.witness, alphabet);
  if (!s.prime) {
    EXPECT_EQ(classify_real_projective(m).kind, ElementKind::kEllipticInfiniteOrder);
  } else {
    EXPECT_EQ(translation_length(m, *s.prime), 0);
    EXPECT_TRUE(classify_real_projective(m).infinite_order());
  }
}

TEST(Irreducibility, DeltaHalf) {
  const Alphabet d = lu_generators(Rational(1, 2));
  const IrreducibilityReport r = irreducibility_report(d, 8, 6, Rational(1, 2));
  ASSERT_EQ(r.places.size(), 2U);
  EXPECT_FALSE(r.places[0].prime);
  EXPECT_EQ(r.places[0].kind, PlaceStatus::Kind::kIndiscreteWitness);
  EXPECT_EQ(format_word(*r.places[0].witness, d), "a b^-1");
  EXPECT_EQ(r.places[0].witness_class->kind, ElementKind::kEllipticInfiniteOrder);
  EXPECT_EQ(*r.places[1].prime, 2U);
  EXPECT_EQ(r.places[1].kind, PlaceStatus::Kind::kIndiscreteWitness);
  EXPECT_EQ(format_word(*r.places[1].witness, d), "a");
  EXPECT_TRUE(r.product_discrete);
  EXPECT_NE(r.product_justification.find("S-integer diagonal embedding"), std::string::npos);
  EXPECT_EQ(r.density.verdict, DensityResult::Verdict::kDense);
  for (const PlaceStatus& s : r.places) expect_witness_reverifies(s, d);
  ASSERT_FALSE(r.conditional_notes.empty());
  for (const std::string& note : r.conditional_notes) {
    EXPECT_TRUE(has_prefix(note, kConditionalPrefix)) << note;
  }
}

TEST(Irreducibility, DeltaFourIsDiscreteAtTheRealPlace) {
  const Alphabet d = lu_generators(4);
  const IrreducibilityReport r = irreducibility_report(d, 8, 6, Rational(4));
  ASSERT_EQ(r.places.size(), 1U);
  EXPECT_EQ(r.places[0].kind, PlaceStatus::Kind::kDiscrete);
  EXPECT_FALSE(r.places[0].witness);
  // Without the parameter the word search alone finds no elliptic witness.
  const IrreducibilityReport plain = irreducibility_report(d, 8, 6);
  EXPECT_EQ(plain.places[0].kind, PlaceStatus::Kind::kInconclusive);
  EXPECT_TRUE(r.conditional_notes.empty());
}

TEST(Irreducibility, LongReid) {
  const Alphabet lr = long_reid_generators();
  const IrreducibilityReport r = irreducibility_report(lr, 8, 6);
  ASSERT_EQ(r.places.size(), 3U);
  EXPECT_EQ(*r.places[1].prime, 2U);
  EXPECT_EQ(*r.places[2].prime, 3U);
  for (const PlaceStatus& s : r.places) expect_witness_reverifies(s, lr);
  // a is a 2-adic unit diagonal matrix and b lies in SL2(Z_3); both have
  // infinite order.
  EXPECT_EQ(format_word(*r.places[1].witness, lr), "a");
  EXPECT_EQ(format_word(*r.places[2].witness, lr), "b");
  EXPECT_TRUE(r.product_discrete);
}

TEST(Probe, StatedPair) {
  const ProbeReport r = two_gen_probe(Mat2(2, 1, 1, 1), Mat2(1, Rational(1, 8), 0, 1), 2, 5);
  EXPECT_TRUE(r.loxodromic.passed);
  EXPECT_EQ(r.trace_g, 3);
  EXPECT_TRUE(r.dense.passed);
  EXPECT_NE(*r.density.commutator_trace, 2);
  EXPECT_TRUE(r.unbounded.passed);
  ASSERT_TRUE(r.unbounded_word);
  EXPECT_EQ(r.unbounded_trace, Rational(25, 8));
  EXPECT_EQ(vp(r.unbounded_trace, 2), Valuation(-3));
  EXPECT_EQ(r.commutator_distances.size(), 6U);
  EXPECT_EQ(r.commutator_distances[0], Rational(1, 8));
}

TEST(Probe, AllPassCarriesConditionalTag) {
  const ProbeReport r = two_gen_probe(Mat2(1, Rational(1, 4), Rational(1, 4), Rational(17, 16)),
                                      Mat2(1, Rational(1, 8), 0, 1), 2, 5);
  EXPECT_TRUE(r.all_passed);
  EXPECT_EQ(r.message, kProbeAllPassMessage);
  EXPECT_NE(r.message.find("conditional on the Greenberg–Shalom hypothesis"), std::string::npos);
}

TEST(Probe, Failures) {
  const Mat2 g(2, 1, 1, 1);
  const ProbeReport same = two_gen_probe(g, g, 2, 5);
  EXPECT_FALSE(same.dense.passed);
  EXPECT_EQ(same.density.reason, DensityResult::Reason::kReducible);
  EXPECT_FALSE(same.all_passed);
  EXPECT_TRUE(same.message.empty());
  const ProbeReport para = two_gen_probe(Mat2(1, 1, 0, 1), Mat2(1, 0, Rational(1, 2), 1), 2, 3);
  EXPECT_FALSE(para.loxodromic.passed);
  EXPECT_THROW(two_gen_probe(g, Mat2(1, Rational(1, 3), 0, 1), 2, 5), ParameterError);
  EXPECT_THROW(two_gen_probe(Mat2::diag(2, 1), g, 2, 5), ParameterError);
}

}  // namespace
}  // namespace commlab
