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

// Report serialization and the generator file format.
//
// Reports are JSON objects with sorted keys. Every exact quantity is a string
// ("n/d" or an integer), never a float, and words use the parse_word syntax.
//
// Generator file:
//
//     {"generators": [{"name": "a", "matrix": [["3", "0"], ["0", "1/3"]]}]}
//
// Matrix entries may also be JSON integers.

#ifndef COMMLAB_REPORT_HPP_
#define COMMLAB_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "commlab/classify.hpp"
#include "commlab/errors.hpp"
#include "commlab/mat2.hpp"
#include "commlab/rational.hpp"
#include "commlab/tree.hpp"
#include "commlab/words.hpp"
#include "json.hpp"

namespace commlab {

inline constexpr char kToolVersion[] = "0.1.0";

using Json = nlohmann::json;

// Malformed generator file; line and column are 1-based.
class GeneratorFileError : public ParameterError {
 public:
  GeneratorFileError(const std::string& what, long line, long column)
      : ParameterError(what), line_(line), column_(column) {}
  long line() const { return line_; }
  long column() const { return column_; }

 private:
  long line_;
  long column_;
};

Alphabet parse_generator_file(std::string_view text);
std::string write_generator_file(const Alphabet& alphabet);

// The built-in `long-reid` alphabet: a = [[3,0],[0,1/3]] and
// b = [[1/8,9],[1/32,41/4]], a surface group in PGL2(Q_2) x PGL2(Q_3).
Alphabet long_reid_generators();

Json to_json(const Rational& r);
Json to_json(const Mat2& m);  // [["a","b"],["c","d"]]
Json to_json(const ElementClass& c);

// {"word", "matrix", "classification"} with classification taken at `prime`
// (real place when nullopt).
Json witness_json(const Word& w, const Alphabet& alphabet,
                  std::optional<Prime> prime = std::nullopt);

// Canonical text: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& report);

}  // namespace commlab

#endif  // COMMLAB_REPORT_HPP_
