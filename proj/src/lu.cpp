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

#include "commlab/lu.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "commlab/errors.hpp"

namespace commlab {

Alphabet lu_generators(const Rational& q) {
  if (q.is_zero()) throw ParameterError("q must be nonzero");
  return Alphabet({{"a", Mat2(1, 0, 1, 1)}, {"b", Mat2(1, q, 0, 1)}});
}

KnappResult knapp(const Rational& q) {
  const Rational m = q.abs();
  if (m.is_zero() || m >= 4) {
    throw ParameterError("knapp criterion needs 0 < |q| < 4, got q = " +
                         q.str());
  }
  KnappResult r;
  r.cosine = Rational(1) - m / 2;
  if (r.cosine == Rational(1, 2)) {
    r.n = 3;
  } else if (r.cosine == 0) {
    r.n = 4;
  } else if (r.cosine == Rational(-1, 2)) {
    r.n = 6;
  }
  r.discrete = r.n != 0;
  return r;
}

std::string to_string(FreenessCertificate::Kind kind) {
  switch (kind) {
    case FreenessCertificate::Kind::kFree:
      return "Free";
    case FreenessCertificate::Kind::kNotApplicable:
      return "NotApplicable";
    case FreenessCertificate::Kind::kRelatorFound:
      return "RelatorFound";
  }
  return "?";
}

FreenessCertificate pingpong_certificate(const Rational& q) {
  const Alphabet gens = lu_generators(q);
  FreenessCertificate cert;
  if (q.abs() < 4) return cert;

  const Mat2 c = Mat2::diag(1, 2);
  const Mat2 lower = c * gens.matrix(0) * c.inverse();
  const Mat2 upper = c * gens.matrix(1) * c.inverse();
  // Both conjugates must stay unipotent of the expected shape.
  if (lower.a11() != 1 || lower.a12() != 0 || lower.a22() != 1 ||
      upper.a11() != 1 || upper.a21() != 0 || upper.a22() != 1) {
    throw std::logic_error("ping-pong conjugation left the unipotent shape");
  }
  PingPongData data{c, lower.a21(), upper.a12()};
  // |z| < 1 implies |z + n*mu| >= |n||mu| - |z| > 1 for n != 0 iff |mu| >= 2;
  // the lower generator is the same map after z -> 1/z.
  if (data.lower_parameter.abs() < 2 || data.upper_parameter.abs() < 2) {
    return cert;
  }
  cert.kind = FreenessCertificate::Kind::kFree;
  cert.pingpong = data;
  return cert;
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kRelatorFound:
      return "relator found";
    case SearchStatus::kNoneFound:
      return "none found";
    case SearchStatus::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

FreenessCertificate RelatorSearchResult::certificate() const {
  FreenessCertificate cert;
  if (relator && status == SearchStatus::kRelatorFound) {
    cert.kind = FreenessCertificate::Kind::kRelatorFound;
    cert.relator = relator;
  }
  return cert;
}

namespace {

struct Node {
  Word word;
  Mat2 value = Mat2::identity();
  Mat2 key = Mat2::identity();
};

// Counts used limbs, not allocated ones, so the estimate depends only on the
// values and not on how they were computed.
uint64_t mpz_bytes(const mpz_class& z) {
  return sizeof(mpz_class) + sizeof(mp_limb_t) * mpz_size(z.get_mpz_t());
}

uint64_t entry_bytes(const Node& n) {
  uint64_t bytes = sizeof(Word) + n.word.length() + 64;
  for (const Rational& r : n.key.entries()) {
    bytes += mpz_bytes(r.raw().get_num()) + mpz_bytes(r.raw().get_den());
  }
  return bytes;
}

}  // namespace

RelatorSearchResult relator_search(const Alphabet& alphabet, size_t max_len,
                                   uint64_t memory_cap, unsigned workers) {
  if (max_len < 2) throw ParameterError("max_len must be at least 2");
  const size_t half = (max_len + 1) / 2;
  const size_t codes = 2 * alphabet.size();

  std::unordered_map<Mat2, std::vector<Word>, Mat2Hash> table;
  RelatorSearchResult result;
  RelatorSearchStats& stats = result.stats;

  std::vector<Node> level{Node{}};
  bool capped = false;
  for (size_t h = 0; h <= half; ++h) {
    if (h > 0) {
      // Extend the previous level one letter at a time; shards are contiguous
      // slices so concatenating them preserves lexicographic order.
      const size_t shard_count =
          std::min<size_t>(level.size(), 4 * static_cast<size_t>(workers));
      auto shards = parallel_map<std::vector<Node>>(
          shard_count, workers, [&](size_t s) {
            std::vector<Node> out;
            const size_t lo = level.size() * s / shard_count;
            const size_t hi = level.size() * (s + 1) / shard_count;
            for (size_t i = lo; i < hi; ++i) {
              const Node& parent = level[i];
              const auto letters = parent.word.letters();
              for (uint8_t c = 0; c < codes; ++c) {
                const Letter l{c};
                if (!letters.empty() && letters.back().inverted() == l) {
                  continue;
                }
                std::vector<Letter> w(letters.begin(), letters.end());
                w.push_back(l);
                Node child;
                child.word = Word::from_reduced(std::move(w));
                child.value = parent.value * alphabet.letter_matrix(l);
                child.key = child.value.projective_normal_form();
                out.push_back(std::move(child));
              }
            }
            return out;
          });
      level.clear();
      for (auto& shard : shards) {
        for (Node& n : shard) level.push_back(std::move(n));
      }
    }

    uint64_t level_bytes = 0;
    for (const Node& n : level) level_bytes += entry_bytes(n);
    if (memory_cap != kUnlimitedMemory &&
        (level_bytes > memory_cap ||
         stats.table_bytes > memory_cap - level_bytes)) {
      capped = true;
      break;
    }

    uint64_t fresh = 0;
    std::unordered_map<Mat2, bool, Mat2Hash> seen_here;
    for (const Node& n : level) {
      auto [it, inserted] = table.try_emplace(n.key);
      if (inserted) ++fresh;
      it->second.push_back(n.word);
      seen_here.try_emplace(n.key, true);
    }
    stats.words_by_length.push_back(level.size());
    stats.images_by_length.push_back(seen_here.size());
    stats.new_images_by_length.push_back(fresh);
    stats.table_entries += level.size();
    stats.table_bytes += level_bytes;
    result.deepest_half_length = h;
  }

  // Every relator of length <= 2 * deepest splits into two table words.
  const size_t settled = 2 * result.deepest_half_length;
  const size_t limit = std::min(max_len, settled);
  size_t best = std::numeric_limits<size_t>::max();
  std::set<Word> candidates;
  for (const auto& [key, words] : table) {
    for (size_t i = 0; i < words.size(); ++i) {
      for (size_t j = i + 1; j < words.size(); ++j) {
        const Word r = words[i] * words[j].inverse();
        if (r.empty() || r.length() > max_len || r.length() > best) continue;
        if (r.length() < best) {
          best = r.length();
          candidates.clear();
        }
        candidates.insert(necklace_canonical(r));
      }
    }
  }

  if (!candidates.empty()) {
    for (const Word& c : candidates) {
      const Mat2 m = evaluate(c, alphabet);
      if (!m.is_scalar()) {
        throw std::logic_error("relator candidate is not scalar");
      }
    }
    result.shortest_relators.assign(candidates.begin(), candidates.end());
    result.relator = result.shortest_relators.front();
    result.scalar = evaluate(*result.relator, alphabet).a11();
    if (result.scalar == 1) {
      result.sl2_power = 1;
    } else if (result.scalar == -1) {
      result.sl2_power = 2;
    }
  }

  const bool settled_found = !candidates.empty() && best <= limit;
  if (settled_found) {
    result.status = SearchStatus::kRelatorFound;
    result.verified_up_to = best - 1;
  } else if (capped) {
    result.status = SearchStatus::kInconclusive;
    result.verified_up_to = limit;
  } else {
    result.status = SearchStatus::kNoneFound;
    result.verified_up_to = max_len;
  }
  return result;
}

}  // namespace commlab
