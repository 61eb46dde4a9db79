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

#include "commlab/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "commlab/errors.hpp"

namespace commlab {

Word Word::reduce(std::span<const Letter> raw, size_t rank) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l.generator() >= rank) {
      throw ParameterError("letter refers to generator " +
                           std::to_string(l.generator()) +
                           " outside an alphabet of size " +
                           std::to_string(rank));
    }
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word Word::from_reduced(std::vector<Letter> letters) {
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = l.inverted();
  return Word(std::move(out));
}

Word Word::pow(long k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters_;
  size_t i = 0;
  while (i < v.letters_.size() && !out.empty() &&
         out.back() == v.letters_[i].inverted()) {
    out.pop_back();
    ++i;
  }
  out.insert(out.end(), v.letters_.begin() + static_cast<long>(i),
             v.letters_.end());
  return Word(std::move(out));
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a < b;
}

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '^' || c == ',' ||
        c == '"') {
      return false;
    }
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<Generator> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty() || generators_.size() > kMaxAlphabetSize) {
    throw ParameterError("alphabet must have between 1 and 8 generators");
  }
  std::set<std::string> seen;
  for (const Generator& g : generators_) {
    if (!valid_name(g.name)) {
      throw ParameterError("invalid generator name '" + g.name + "'");
    }
    if (!seen.insert(g.name).second) {
      throw ParameterError("duplicate generator name '" + g.name + "'");
    }
    letter_matrices_.push_back(g.matrix);
    letter_matrices_.push_back(g.matrix.inverse());
  }
}

std::optional<size_t> Alphabet::find(std::string_view name) const {
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    bool inverse = false;
    std::string name = token;
    if (name.size() > 3 && name.ends_with("^-1")) {
      name.resize(name.size() - 3);
      inverse = true;
    }
    std::optional<size_t> index = alphabet.find(name);
    if (!index && !inverse && name.size() == 1 &&
        std::isupper(static_cast<unsigned char>(name[0]))) {
      index = alphabet.find(std::string(
          1, static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])))));
      inverse = index.has_value();
    }
    if (!index) throw ParameterError("unknown generator token '" + token + "'");
    raw.push_back(Letter::of(*index, inverse));
  }
  return Word::reduce(raw, alphabet.size());
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(l.generator());
    if (l.is_inverse()) out += "^-1";
  }
  return out;
}

Mat2 evaluate(const Word& w, const Alphabet& alphabet) {
  Mat2 out = Mat2::identity();
  for (Letter l : w.letters()) out *= alphabet.letter_matrix(l);
  return out;
}

Word cyclic_reduce(const Word& w) {
  auto letters = w.letters();
  size_t lo = 0;
  size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return Word::from_reduced(
      std::vector<Letter>(letters.begin() + static_cast<long>(lo),
                          letters.begin() + static_cast<long>(hi)));
}

namespace {

// Compares rotation k of x against the reference sequence y, both length n.
template <class Seq>
int compare_rotation(const Seq& x, size_t k, std::span<const Letter> y) {
  const size_t n = y.size();
  for (size_t i = 0; i < n; ++i) {
    const Letter a = x[(i + k) % n];
    if (a != y[i]) return a < y[i] ? -1 : 1;
  }
  return 0;
}

struct InverseView {
  std::span<const Letter> w;
  Letter operator[](size_t i) const { return w[w.size() - 1 - i].inverted(); }
};

}  // namespace

Word necklace_canonical(const Word& w) {
  const Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  const std::vector<Letter> base(c.letters().begin(), c.letters().end());
  const Word inv = c.inverse();
  const std::vector<Letter> inv_letters(inv.letters().begin(),
                                        inv.letters().end());
  const size_t n = base.size();
  std::vector<Letter> best = base;
  auto consider = [&](const std::vector<Letter>& seq) {
    for (size_t k = 0; k < n; ++k) {
      if (compare_rotation(seq, k, best) < 0) {
        std::vector<Letter> rot(n);
        for (size_t i = 0; i < n; ++i) rot[i] = seq[(i + k) % n];
        best = std::move(rot);
      }
    }
  };
  consider(base);
  consider(inv_letters);
  return Word::from_reduced(std::move(best));
}

bool is_necklace_canonical(std::span<const Letter> letters) {
  const size_t n = letters.size();
  if (n == 0) return true;
  if (n >= 2 && letters.front() == letters.back().inverted()) return false;
  for (size_t k = 1; k < n; ++k) {
    if (compare_rotation(letters, k, letters) < 0) return false;
  }
  const InverseView inv{letters};
  for (size_t k = 0; k < n; ++k) {
    if (compare_rotation(inv, k, letters) < 0) return false;
  }
  return true;
}

uint64_t reduced_word_count(size_t k, size_t n) {
  if (n == 0) return 1;
  uint64_t count = 2 * k;
  for (size_t i = 1; i < n; ++i) count *= 2 * k - 1;
  return count;
}

std::vector<Word> words_of_length(size_t rank, size_t n) {
  std::vector<Word> out;
  WordEnumerator it(rank, n);
  while (auto w = it.next()) {
    if (w->length() == n) out.push_back(std::move(*w));
  }
  return out;
}

WordEnumerator::WordEnumerator(size_t rank, size_t max_len, Word prefix)
    : rank_(rank),
      max_len_(max_len),
      prefix_(prefix.letters().begin(), prefix.letters().end()) {
  if (rank == 0 || rank > kMaxAlphabetSize) {
    throw ParameterError("alphabet size must be between 1 and 8");
  }
  for (Letter l : prefix_) {
    if (l.generator() >= rank) {
      throw ParameterError("prefix letter outside the alphabet");
    }
  }
  restart();
}

void WordEnumerator::restart() {
  current_ = prefix_;
  done_ = prefix_.size() > max_len_;
}

bool WordEnumerator::fill_minimal(size_t from) {
  for (size_t i = from; i < current_.size(); ++i) {
    uint8_t c = 0;
    if (i > 0 && current_[i - 1].inverted() == Letter{c}) ++c;
    if (c >= 2 * rank_) return false;
    current_[i] = Letter{c};
  }
  return true;
}

bool WordEnumerator::advance() {
  const size_t fixed = prefix_.size();
  for (size_t i = current_.size(); i-- > fixed;) {
    for (uint8_t c = static_cast<uint8_t>(current_[i].code + 1); c < 2 * rank_;
         ++c) {
      if (i > 0 && current_[i - 1].inverted() == Letter{c}) continue;
      current_[i] = Letter{c};
      if (fill_minimal(i + 1)) return true;
    }
  }
  // Move on to the next length.
  while (current_.size() < max_len_) {
    current_.resize(current_.size() + 1);
    if (fill_minimal(fixed)) return true;
  }
  return false;
}

std::optional<Word> WordEnumerator::next() {
  if (done_) return std::nullopt;
  Word out = Word::from_reduced(current_);
  if (!advance()) done_ = true;
  return out;
}

}  // namespace commlab
