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

// Free-group words over a matrix alphabet.
//
// Letters are ordered a < a^-1 < b < b^-1 < ..., which is exactly the order
// of the packed code 2*generator + inverse. All lexicographic comparisons,
// enumeration order and necklace canonical forms use that order.

#ifndef COMMLAB_WORDS_HPP_
#define COMMLAB_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commlab/mat2.hpp"

namespace commlab {

inline constexpr size_t kMaxAlphabetSize = 8;

struct Letter {
  uint8_t code = 0;

  static constexpr Letter of(size_t generator, bool inverse) {
    return Letter{static_cast<uint8_t>(2 * generator + (inverse ? 1 : 0))};
  }
  constexpr size_t generator() const { return code >> 1; }
  constexpr bool is_inverse() const { return (code & 1) != 0; }
  constexpr Letter inverted() const {
    return Letter{static_cast<uint8_t>(code ^ 1)};
  }

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

// A freely reduced word. The empty word is the identity.
class Word {
 public:
  Word() = default;

  // Free reduction of an arbitrary letter sequence. Letters must name
  // generators below `rank` (ParameterError otherwise).
  static Word reduce(std::span<const Letter> raw, size_t rank);

  // Trusts the caller that `letters` is already reduced.
  static Word from_reduced(std::vector<Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(long k) const;

  // Reduced concatenation.
  friend Word operator*(const Word& u, const Word& v);

  friend bool operator==(const Word&, const Word&) = default;
  // Plain lexicographic order on letter codes.
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

// (length, lexicographic) order.
bool shortlex_less(const Word& a, const Word& b);

// Named generators with their matrices. 1 to 8 generators; names are
// distinct, nonempty, and free of whitespace, '^', ',' and quotes.
class Alphabet {
 public:
  struct Generator {
    std::string name;
    Mat2 matrix;
  };

  explicit Alphabet(std::vector<Generator> generators);

  size_t size() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::string& name(size_t i) const { return generators_[i].name; }
  const Mat2& matrix(size_t i) const { return generators_[i].matrix; }
  const Mat2& letter_matrix(Letter l) const { return letter_matrices_[l.code]; }
  std::optional<size_t> find(std::string_view name) const;

 private:
  std::vector<Generator> generators_;
  std::vector<Mat2> letter_matrices_;
};

// Tokens `a`, `a^-1`, or the upper-cased single-character name `A` for the
// inverse of `a` (when `A` is not itself a generator). Whitespace separated.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

// Ordered product of the letter matrices; the empty word gives I.
Mat2 evaluate(const Word& w, const Alphabet& alphabet);

// Strips matching first/last letter pairs.
Word cyclic_reduce(const Word& w);

// Least word, lexicographically, among rotations of the cyclic reduction of w
// and of its inverse. Constant on conjugacy classes up to inversion.
Word necklace_canonical(const Word& w);

// True iff `letters` is cyclically reduced and equals its canonical form.
bool is_necklace_canonical(std::span<const Letter> letters);

// Number of reduced words of length exactly n over k generators.
uint64_t reduced_word_count(size_t k, size_t n);

// All reduced words of length exactly n, lexicographically.
std::vector<Word> words_of_length(size_t rank, size_t n);

// Restartable stream of reduced words, in (length, lexicographic) order, of
// length at most max_len that begin with `prefix` (the prefix itself
// included). With prefixes of a fixed length d the streams for distinct
// prefixes are disjoint and, together with the stream of words shorter than
// d, cover every word exactly once.
class WordEnumerator {
 public:
  WordEnumerator(size_t rank, size_t max_len, Word prefix = Word());

  std::optional<Word> next();
  void restart();

 private:
  bool fill_minimal(size_t from);
  bool advance();

  size_t rank_;
  size_t max_len_;
  std::vector<Letter> prefix_;
  std::vector<Letter> current_;
  bool done_ = false;
};

// Depth-first, lexicographic walk over `prefix` and all of its reduced
// extensions up to max_len, carrying the evaluated prefix product so each
// visited word costs one matrix multiplication. The visitor receives
// (letters, matrix) and returns false to prune the subtree below that word.
template <class Visitor>
void for_each_word(const Alphabet& alphabet, size_t max_len,
                   const Word& prefix, Visitor&& visit) {
  std::vector<Letter> letters(prefix.letters().begin(),
                              prefix.letters().end());
  if (letters.size() > max_len) return;
  const size_t codes = 2 * alphabet.size();
  auto walk = [&](auto&& self, const Mat2& value) -> void {
    if (!visit(std::span<const Letter>(letters), value)) return;
    if (letters.size() == max_len) return;
    for (uint8_t c = 0; c < codes; ++c) {
      const Letter next{c};
      if (!letters.empty() && letters.back().inverted() == next) continue;
      letters.push_back(next);
      self(self, value * alphabet.letter_matrix(next));
      letters.pop_back();
    }
  };
  walk(walk, evaluate(prefix, alphabet));
}

}  // namespace commlab

#endif  // COMMLAB_WORDS_HPP_
