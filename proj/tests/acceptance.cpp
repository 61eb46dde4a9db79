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


// Acceptance run: one PASS/FAIL line per criterion with its runtime limit.
// Exit status is the number of failed criteria, capped at 1.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commlab/cli.hpp"
#include "commlab/diagnostics.hpp"
#include "commlab/lu.hpp"
#include "commlab/report.hpp"
#include "commlab/tree.hpp"
#include "commlab/valuation.hpp"
#include "naive_oracles.hpp"
#include "test_support.hpp"

namespace commlab {
namespace {

using testing::Rng;

// Collects the first failed expectation of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  std::string note;

 private:
  std::string failure_;
};

struct CliRun {
  int exit = 0;
  std::string out;
  Json report;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.exit = run_command(args, out, err);
  r.out = out.str();
  if (!r.out.empty() && r.out.front() == '{') r.report = Json::parse(r.out);
  return r;
}

std::string strip_timing(const std::string& text) {
  static const std::regex timing("\n *\"timing_ms\": [0-9]+,?");
  return std::regex_replace(text, timing, "");
}

void knapp_sweep(Check& c) {
  const std::vector<std::pair<std::string, int>> expected = {
      {"1/2", 0}, {"1", 3}, {"3/2", 0}, {"2", 4}, {"5/2", 0}, {"3", 6}, {"7/2", 0}};
  for (const auto& [q, n] : expected) {
    const CliRun r = cli({"lu", "knapp", "--q", q});
    c.expect(r.exit == kExitOk, "q = " + q + ": exit " + std::to_string(r.exit));
    if (r.exit != kExitOk) continue;
    const Json& res = r.report["results"][0];
    const bool discrete = res["verdict"] == "Discrete";
    c.expect(discrete == (n != 0), "q = " + q + ": verdict " + res["verdict"].dump());
    if (n != 0) c.expect(res.value("n", 0) == n, "q = " + q + ": wrong n");
  }
}

void relators(Check& c) {
  const std::vector<std::pair<std::string, size_t>> found = {{"1", 3}, {"2", 2}, {"3", 3}};
  for (const auto& [q, k] : found) {
    const CliRun r = cli({"lu", "relators", "--q", q, "--max-len", "12"});
    c.expect(r.exit == kExitOk, "q = " + q + ": exit " + std::to_string(r.exit));
    if (r.exit != kExitOk) continue;
    const Json& res = r.report["results"][0];
    c.expect(res["status"] == "relator found", "q = " + q + ": no relator");
    c.expect(res.value("length", 0) == static_cast<int>(2 * k),
             "q = " + q + ": shortest length " + res.value("length", Json()).dump());
    const Alphabet d = lu_generators(Rational::parse(q));
    const std::string power =
        format_word(necklace_canonical(parse_word("a b^-1", d).pow(k)), d);
    const Json& all = res["shortest_relators"];
    c.expect(std::find(all.begin(), all.end(), power) != all.end(),
             "q = " + q + ": " + power + " not among the shortest relators");
    c.note += " q=" + q + ":" + res["relator"].get<std::string>() + ";";
  }
  for (const std::string q : {"4", "9/2"}) {
    const CliRun r = cli({"lu", "relators", "--q", q, "--max-len", "12"});
    c.expect(r.exit == kExitOk, "q = " + q + ": exit " + std::to_string(r.exit));
    if (r.exit != kExitOk) continue;
    const Json& res = r.report["results"][0];
    c.expect(res["status"] == "none found", "q = " + q + ": status " + res["status"].dump());
    c.expect(res["verified_up_to"] == 12, "q = " + q + ": not verified to 12");
  }
}

void oracle_equivalence(Check& c) {
  const std::vector<std::pair<std::string, Alphabet>> groups = {
      {"Delta_1/2", lu_generators(Rational(1, 2))},
      {"Delta_2", lu_generators(2)},
      {"Long-Reid", long_reid_generators()}};
  for (const auto& [name, alphabet] : groups) {
    const oracle::NaiveRelators slow = oracle::naive_relators(alphabet, 8);
    for (size_t len = 2; len <= 8; ++len) {
      const RelatorSearchResult fast = relator_search(alphabet, len);
      const oracle::NaiveRelators ref = oracle::naive_relators(alphabet, len);
      c.expect(fast.shortest_relators == ref.shortest,
               name + ": shortest relators differ at max_len " + std::to_string(len));
      for (size_t n = 0; n < fast.stats.images_by_length.size(); ++n) {
        c.expect(fast.stats.images_by_length[n] == slow.images_by_length[n],
                 name + ": image count differs at length " + std::to_string(n));
      }
    }
    // A deep search keeps counting images past the oracle's horizon.
    const RelatorSearchResult deep = relator_search(alphabet, 16);
    const size_t top = std::min<size_t>(8, deep.stats.images_by_length.size() - 1);
    for (size_t n = 0; n <= top; ++n) {
      c.expect(deep.stats.images_by_length[n] == slow.images_by_length[n],
               name + ": deep image count differs at length " + std::to_string(n));
    }
  }
}

void long_reid_traces(Check& c) {
  const Alphabet lr = long_reid_generators();
  const Mat2& a = lr.matrix(0);
  const Mat2& b = lr.matrix(1);
  c.expect(a.trace() == Rational(10, 3), "tr(a)");
  c.expect(b.trace() == Rational(83, 8), "tr(b)");
  c.expect((a * b).trace() == Rational(91, 24), "tr(ab)");
  for (const Rational& t : {a.trace(), b.trace(), (a * b).trace()}) {
    c.expect(vp(t, 2) < Valuation(0) || vp(t, 3) < Valuation(0),
             t.str() + " is integral at {2,3}");
  }
  const TraceScanResult scan = integral_trace_scan(lr, {2, 3}, 6);
  std::set<Word> hits;
  for (const TraceHit& h : scan.hits) hits.insert(h.word);
  c.expect(hits == oracle::naive_integral_trace_classes(lr, {2, 3}, 6),
           "hit set differs from the oracle");
  c.note = " " + std::to_string(hits.size()) + " hit class(es)";
  for (const TraceHit& h : scan.hits) {
    c.note += ", " + format_word(h.word, lr) + " (trace " + h.trace.str() + ")";
  }
}

void tree_consistency(Check& c) {
  const Alphabet d = lu_generators(Rational(1, 2));
  Rng rng(5);
  const std::vector<TreeVertex> nearby = ball(TreeVertex::base(2), 6);
  for (int i = 0; i < 50; ++i) {
    const Word w = rng.word(2, 6);
    const Mat2 g = evaluate(w, d);
    long least = -1;
    for (const TreeVertex& v : nearby) {
      const long dv = distance(v, act(g, v));
      if (least < 0 || dv < least) least = dv;
    }
    c.expect(translation_length(g, 2) == least,
             "translation length of " + format_word(w, d));
  }
  for (int i = 0; i < 200; ++i) {
    const TreeVertex x = act(rng.invertible(12), TreeVertex::base(2));
    const TreeVertex y = act(rng.invertible(12), TreeVertex::base(2));
    const TreeVertex z = act(rng.invertible(12), TreeVertex::base(2));
    const long xy = distance(x, y);
    c.expect(xy >= 0 && (xy == 0) == (x == y), "identity of indiscernibles");
    c.expect(xy == distance(y, x), "symmetry");
    c.expect(distance(x, z) <= xy + distance(y, z), "triangle inequality");
  }
}

void busemann_pigeonhole(Check& c) {
  Rng rng(6);
  for (Prime p : {2UL, 3UL}) {
    for (int i = 0; i < 100; ++i) {
      const Mat2 g = rng.upper_triangular(40);
      const Mat2 h = rng.upper_triangular(40);
      c.expect(busemann(g * h, p) == busemann(g, p) + busemann(h, p),
               "additivity at p = " + std::to_string(p));
    }
  }
  const Alphabet d = lu_generators(Rational(1, 2));
  const Mat2& x = d.matrix(0);
  const Mat2& y = d.matrix(1);
  const TreeVertex v = vertex_of(Mat2::diag(Rational(1, 2), 1), 2);
  c.expect(act(y, v) == v, "y does not fix v");
  const PigeonholeResult r = commutator_pigeonhole(x, y, v, 2, 100000);
  c.expect(r.steps <= r.ball_bound + 1, "steps exceed the ball bound");
  c.expect(act(r.z, v) == v, "z does not fix v");
  c.note = " n1=" + std::to_string(r.n1) + " n2=" + std::to_string(r.n2) +
           " steps=" + std::to_string(r.steps) + " bound=" + std::to_string(r.ball_bound);
}

void probe(Check& c) {
  const ProbeReport r = two_gen_probe(Mat2(2, 1, 1, 1), Mat2(1, Rational(1, 8), 0, 1), 2, 5);
  c.expect(r.loxodromic.passed && r.trace_g == 3, "check (1)");
  c.expect(r.dense.passed && r.density.commutator_trace &&
               *r.density.commutator_trace != 2,
           "check (2)");
  c.expect(r.unbounded.passed && vp(r.unbounded_trace, 2) == Valuation(-3),
           "check (4)");
  c.expect(r.commutator_distances.size() == 6, "check (3) sequence length");
  c.note = " check (3) " + std::string(r.commutators.passed ? "passed" : "failed") + ":";
  for (const Rational& x : r.commutator_distances) c.note += " " + x.str();

  // The all-pass message, exercised on a pair whose commutators do shrink.
  const ProbeReport all = two_gen_probe(Mat2(1, Rational(1, 4), Rational(1, 4), Rational(17, 16)),
                                        Mat2(1, Rational(1, 8), 0, 1), 2, 5);
  c.expect(all.all_passed, "alternative pair does not pass all checks");
  c.expect(all.message.find(kConditionalPrefix) != std::string::npos,
           "all-pass message lacks the conditional tag");
  c.expect(r.message.empty(), "message set although a check failed");
}

void determinism(Check& c) {
  std::ifstream in(std::string(COMMLAB_SOURCE_DIR) + "/tests/golden/cases.json");
  const Json cases = Json::parse(in);
  for (const Json& cs : cases) {
    const std::string name = cs["name"];
    const std::vector<std::string> args = cs["args"];
    std::ifstream golden(std::string(COMMLAB_SOURCE_DIR) + "/tests/golden/" + name + ".out");
    std::stringstream expected;
    expected << golden.rdbuf();
    for (const char* threads : {"1", "4", "1", "4"}) {
      setenv("COMMLAB_THREADS", threads, 1);
      std::ostringstream out, err;
      const int code = run_command(args, out, err);
      c.expect(code == cs["exit"].get<int>(), name + ": exit " + std::to_string(code));
      c.expect(strip_timing(out.str()) == strip_timing(expected.str()),
               name + ": report differs from golden at " + threads + " thread(s)");
    }
  }
  unsetenv("COMMLAB_THREADS");
  c.note = " " + std::to_string(cases.size()) + " golden cases x 4 runs";
}

struct Criterion {
  const char* name;
  double limit_s;  // 0: no runtime limit
  std::function<void(Check&)> body;
};

int run_all() {
  const std::vector<Criterion> criteria = {
      {"knapp sweep", 1, knapp_sweep},
      {"relators", 60, relators},
      {"search-oracle equivalence", 120, oracle_equivalence},
      {"long-reid traces", 60, long_reid_traces},
      {"tree consistency", 60, tree_consistency},
      {"busemann and pigeonhole", 10, busemann_pigeonhole},
      {"probe", 10, probe},
      {"determinism", 0, determinism},
  };
  // Golden cases run from the source tree, where generator files live.
  std::filesystem::current_path(COMMLAB_SOURCE_DIR);
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& cr = criteria[i];
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_s > 0) c.expect(secs < cr.limit_s, "runtime over the limit");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (c.ok() ? "PASS" : "FAIL") << " " << (i + 1) << " " << cr.name << " ("
         << secs << " s";
    if (cr.limit_s > 0) line << ", limit " << cr.limit_s << " s";
    line << ")";
    if (!c.ok()) line << ": " << c.failure();
    line << c.note;
    std::cout << line.str() << "\n";
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace commlab

int main() { return commlab::run_all(); }
