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

// The parabolic groups Delta_q = <a, b_q> with
//   a = [[1,0],[1,1]],  b_q = [[1,q],[0,1]],
// and the criteria available for rational q: discreteness for 0 < |q| < 4,
// ping-pong freeness for |q| >= 4, and a search for short relators.
//
// Conjugating by diag(1,-1) sends a to a^-1 and b_q to b_{-q}, so Delta_q
// and Delta_{-q} are conjugate; every criterion here depends only on |q|.

#ifndef COMMLAB_LU_HPP_
#define COMMLAB_LU_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "commlab/mat2.hpp"
#include "commlab/parallel.hpp"
#include "commlab/rational.hpp"
#include "commlab/words.hpp"

namespace commlab {

// {a, b} for Delta_q. q = 0 is rejected (b_0 = I).
Alphabet lu_generators(const Rational& q);

struct KnappResult {
  bool discrete = false;
  int n = 0;  // set when discrete: 1 - |q|/2 = cos((n-2)pi/n)
  Rational cosine;  // 1 - |q|/2
};

// Discreteness for rational 0 < |q| < 4. The only rational values of
// cos((n-2)pi/n), n >= 3, are 1/2 (n=3), 0 (n=4) and -1/2 (n=6), so Delta_q
// is discrete exactly for |q| in {1, 2, 3}.
KnappResult knapp(const Rational& q);

// Ping-pong data for the conjugated pair C a C^-1 = [[1,0],[lower,1]],
// C b C^-1 = [[1,upper],[0,1]]. With |lower|, |upper| >= 2 the second
// generator's nonzero powers map {|z| < 1} into {|z| > 1} and the first's map
// {|z| > 1} into {|z| < 1} (Moebius action), so the pair is free.
struct PingPongData {
  Mat2 conjugator = Mat2::identity();
  Rational lower_parameter;
  Rational upper_parameter;
};

struct FreenessCertificate {
  enum class Kind { kFree, kNotApplicable, kRelatorFound };
  Kind kind = Kind::kNotApplicable;
  std::optional<PingPongData> pingpong;
  std::optional<Word> relator;
};

std::string to_string(FreenessCertificate::Kind kind);

// Free for |q| >= 4, NotApplicable otherwise. The conjugator is
// diag(1, 2), which keeps everything rational: lower = 2, upper = q/2, and
// both inequalities hold iff |q| >= 4.
FreenessCertificate pingpong_certificate(const Rational& q);

enum class SearchStatus { kRelatorFound, kNoneFound, kInconclusive };
std::string to_string(SearchStatus status);

struct RelatorSearchStats {
  // Indexed by word length 0..H, H the deepest completed half-length.
  std::vector<uint64_t> words_by_length;
  std::vector<uint64_t> images_by_length;      // distinct images, length == n
  std::vector<uint64_t> new_images_by_length;  // images first seen at n
  uint64_t table_entries = 0;
  uint64_t table_bytes = 0;  // estimate of the key table footprint
};

struct RelatorSearchResult {
  SearchStatus status = SearchStatus::kNoneFound;
  // Least necklace-canonical word among the shortest relators.
  std::optional<Word> relator;
  Rational scalar;  // evaluate(relator) = scalar * I
  // 1 if the relator is trivial in SL2 itself, 2 if only its square is
  // (scalar -1), 0 otherwise.
  int sl2_power = 0;
  // All canonical classes of shortest relators, lexicographic.
  std::vector<Word> shortest_relators;
  // No nonempty reduced word of length <= verified_up_to is scalar, apart
  // from the reported relators when their length is exactly this + 1.
  size_t verified_up_to = 0;
  size_t deepest_half_length = 0;
  RelatorSearchStats stats;

  FreenessCertificate certificate() const;
};

inline constexpr uint64_t kUnlimitedMemory =
    std::numeric_limits<uint64_t>::max();

// Shortest nonempty reduced word of length <= max_len evaluating to a
// scalar matrix (trivial in PGL2). Meet in the middle: all reduced words of
// length <= ceil(max_len/2) are keyed by the projective normal form of their
// value; words u != v sharing a key give the relator u v^-1, and every
// relator of length L <= max_len arises this way from its halves. Exceeding
// memory_cap stops the table growth and downgrades to kInconclusive unless
// the completed levels already settle the answer.
RelatorSearchResult relator_search(const Alphabet& alphabet, size_t max_len,
                                   uint64_t memory_cap = kUnlimitedMemory,
                                   unsigned workers = worker_count());

}  // namespace commlab

#endif  // COMMLAB_LU_HPP_
