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

#include "commlab/report.hpp"

#include <array>
#include <cctype>
#include <utility>
#include <vector>

namespace commlab {

namespace {

using OrderedJson = nlohmann::ordered_json;

struct Position {
  long line = 1;
  long column = 1;
};

Position position_of_offset(std::string_view text, size_t offset) {
  Position pos;
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

// Start positions of every key and scalar value of a syntactically valid
// document, in document order.
std::vector<Position> scalar_tokens(std::string_view text) {
  std::vector<Position> out;
  Position pos;
  auto step = [&](char c) {
    if (c == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  };
  for (size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '"') {
      out.push_back(pos);
      step(c);
      ++i;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < text.size()) {
          step(text[i]);
          ++i;
        }
        step(text[i]);
        ++i;
      }
      if (i < text.size()) {
        step(text[i]);
        ++i;
      }
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',' ||
               c == ':' || c == '[' || c == ']' || c == '{' || c == '}') {
      step(c);
      ++i;
    } else {
      out.push_back(pos);
      while (i < text.size() &&
             !std::isspace(static_cast<unsigned char>(text[i])) &&
             std::string_view(",:[]{}\"").find(text[i]) ==
                 std::string_view::npos) {
        step(text[i]);
        ++i;
      }
    }
  }
  return out;
}

size_t token_count(const OrderedJson& j) {
  if (j.is_object()) {
    size_t n = 0;
    for (const auto& [key, value] : j.items()) n += 1 + token_count(value);
    return n;
  }
  if (j.is_array()) {
    size_t n = 0;
    for (const auto& v : j) n += token_count(v);
    return n;
  }
  return 1;
}

class FileParser {
 public:
  explicit FileParser(std::string_view text)
      : tokens_(scalar_tokens(text)) {
    const size_t first = text.find_first_not_of(" \t\r\n");
    start_ = position_of_offset(text, first == std::string_view::npos ? 0 : first);
  }

  [[noreturn]] void fail_document(const std::string& message) const {
    throw GeneratorFileError("generator file " + std::to_string(start_.line) +
                                 ":" + std::to_string(start_.column) + ": " +
                                 message,
                             start_.line, start_.column);
  }

  [[noreturn]] void fail(size_t token, const std::string& message) const {
    Position pos;
    if (!tokens_.empty()) pos = tokens_[std::min(token, tokens_.size() - 1)];
    throw GeneratorFileError("generator file " + std::to_string(pos.line) +
                                 ":" + std::to_string(pos.column) + ": " +
                                 message,
                             pos.line, pos.column);
  }

  Alphabet parse(const OrderedJson& doc) {
    if (!doc.is_object()) fail_document("top level must be an object");
    size_t idx = 0;
    std::optional<std::vector<Alphabet::Generator>> gens;
    for (const auto& [key, value] : doc.items()) {
      const size_t key_token = idx++;
      if (key != "generators") fail(key_token, "unknown key \"" + key + "\"");
      gens = generators(value, idx, key_token);
      idx += token_count(value);
    }
    if (!gens) fail_document("missing \"generators\"");
    try {
      return Alphabet(std::move(*gens));
    } catch (const ParameterError& e) {
      fail_document(e.what());
    }
  }

 private:
  std::vector<Alphabet::Generator> generators(const OrderedJson& j,
                                              size_t start, size_t anchor) {
    if (!j.is_array()) fail(start, "\"generators\" must be an array");
    if (j.empty()) fail(anchor, "\"generators\" is empty");
    std::vector<Alphabet::Generator> out;
    size_t idx = start;
    for (const auto& g : j) {
      out.push_back(generator(g, idx));
      for (size_t i = 0; i + 1 < out.size(); ++i) {
        if (out[i].name == out.back().name) {
          fail(idx, "duplicate generator name \"" + out.back().name + "\"");
        }
      }
      idx += token_count(g);
    }
    return out;
  }

  Alphabet::Generator generator(const OrderedJson& g, size_t start) {
    if (!g.is_object()) fail(start, "generator must be an object");
    std::optional<std::string> name;
    std::optional<Mat2> matrix;
    size_t idx = start;
    for (const auto& [key, value] : g.items()) {
      const size_t key_token = idx++;
      if (key == "name") {
        if (!value.is_string()) fail(idx, "\"name\" must be a string");
        name = value.get<std::string>();
        try {
          Alphabet({{*name, Mat2::identity()}});  // name rules only
        } catch (const ParameterError& e) {
          fail(idx, e.what());
        }
      } else if (key == "matrix") {
        matrix = parse_matrix(value, idx, key_token);
      } else {
        fail(key_token, "unknown key \"" + key + "\"");
      }
      idx += token_count(value);
    }
    if (!name) fail(start, "generator without \"name\"");
    if (!matrix) fail(start, "generator without \"matrix\"");
    return {*name, *matrix};
  }

  Mat2 parse_matrix(const OrderedJson& m, size_t start, size_t anchor) {
    const auto shape_error = [&] {
      fail(anchor, "\"matrix\" must be a 2x2 array of fraction strings");
    };
    if (!m.is_array() || m.size() != 2) shape_error();
    std::array<Rational, 4> e;
    size_t idx = start;
    for (size_t r = 0; r < 2; ++r) {
      if (!m[r].is_array() || m[r].size() != 2) shape_error();
      for (size_t c = 0; c < 2; ++c) {
        const OrderedJson& v = m[r][c];
        if (v.is_string()) {
          try {
            e[2 * r + c] = Rational::parse(v.get<std::string>());
          } catch (const ParameterError& err) {
            fail(idx, err.what());
          }
        } else if (v.is_number_integer()) {
          e[2 * r + c] = Rational(v.get<long>());
        } else {
          fail(idx, "matrix entry must be a fraction string or an integer");
        }
        idx += token_count(v);
      }
    }
    try {
      return Mat2(e[0], e[1], e[2], e[3]);
    } catch (const ParameterError& err) {
      fail(anchor, err.what());
    }
  }

  std::vector<Position> tokens_;
  Position start_;
};

}  // namespace

Alphabet parse_generator_file(std::string_view text) {
  OrderedJson doc;
  try {
    doc = OrderedJson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    const Position pos = position_of_offset(text, offset);
    throw GeneratorFileError("generator file " + std::to_string(pos.line) +
                                 ":" + std::to_string(pos.column) +
                                 ": malformed JSON",
                             pos.line, pos.column);
  }
  return FileParser(text).parse(doc);
}

std::string write_generator_file(const Alphabet& alphabet) {
  OrderedJson gens = OrderedJson::array();
  for (const auto& g : alphabet.generators()) {
    OrderedJson entry;
    entry["name"] = g.name;
    const auto& e = g.matrix.entries();
    entry["matrix"] = OrderedJson::array({OrderedJson::array({e[0].str(), e[1].str()}),
                                          OrderedJson::array({e[2].str(), e[3].str()})});
    gens.push_back(std::move(entry));
  }
  OrderedJson doc;
  doc["generators"] = std::move(gens);
  return doc.dump(2) + "\n";
}

Alphabet long_reid_generators() {
  return Alphabet({{"a", Mat2(3, 0, 0, Rational(1, 3))},
                   {"b", Mat2(Rational(1, 8), 9, Rational(1, 32),
                              Rational(41, 4))}});
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Mat2& m) {
  const auto& e = m.entries();
  return Json::array({Json::array({e[0].str(), e[1].str()}),
                      Json::array({e[2].str(), e[3].str()})});
}

Json to_json(const ElementClass& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["trace"] = c.trace.str();
  if (c.kind == ElementKind::kEllipticFiniteOrder ||
      c.kind == ElementKind::kIdentity) {
    j["order"] = c.order;
  }
  j["translation_length"] = c.translation_length;
  if (c.odd_determinant_valuation) j["odd_determinant_valuation"] = true;
  return j;
}

Json witness_json(const Word& w, const Alphabet& alphabet,
                  std::optional<Prime> prime) {
  const Mat2 m = evaluate(w, alphabet);
  Json j;
  j["word"] = format_word(w, alphabet);
  j["matrix"] = to_json(m);
  j["place"] = prime ? std::to_string(*prime) : "real";
  j["classification"] =
      to_json(prime ? classify_padic(m, *prime) : classify_real_projective(m));
  return j;
}

std::string dump(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace commlab
