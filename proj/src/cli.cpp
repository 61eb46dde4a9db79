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

#include "commlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "commlab/diagnostics.hpp"
#include "commlab/lu.hpp"
#include "commlab/report.hpp"

namespace commlab {

namespace {

struct Options {
  std::string q;
  std::string builtin;
  std::string gens;
  std::string word;
  std::string primes;
  bool primes_given = false;
  std::string g;
  std::string h;
  std::string format = "json";
  uint64_t mem_cap = kUnlimitedMemory;
  size_t max_len = 0;
  long radius = 6;
  Prime p = 0;
  int iterations = 5;
};

// Alphabet selected by exactly one of --q, --builtin, --gens.
struct Source {
  Alphabet alphabet;
  std::optional<Rational> q;
};

Source load_source(const Options& o, Json& params) {
  const int chosen = !o.q.empty() + !o.builtin.empty() + !o.gens.empty();
  if (chosen != 1) {
    throw ParameterError("choose exactly one of --q, --builtin, --gens");
  }
  if (!o.q.empty()) {
    const Rational q = Rational::parse(o.q);
    params["q"] = q.str();
    return {lu_generators(q), q};
  }
  if (!o.builtin.empty()) {
    if (o.builtin != "long-reid") {
      throw ParameterError("unknown builtin alphabet \"" + o.builtin + "\"");
    }
    params["builtin"] = o.builtin;
    return {long_reid_generators(), std::nullopt};
  }
  std::ifstream in(o.gens, std::ios::binary);
  if (!in) throw ParameterError("cannot read generator file " + o.gens);
  std::ostringstream text;
  text << in.rdbuf();
  Alphabet alphabet = parse_generator_file(text.str());
  // The file's content, not its path, identifies the input.
  Json gens = Json::array();
  for (const auto& g : alphabet.generators()) {
    gens.push_back({{"name", g.name}, {"matrix", to_json(g.matrix)}});
  }
  params["generators"] = std::move(gens);
  return {std::move(alphabet), std::nullopt};
}

Rational require_q(const Options& o, Json& params) {
  if (o.q.empty()) throw ParameterError("--q is required");
  const Rational q = Rational::parse(o.q);
  params["q"] = q.str();
  return q;
}

Prime require_p(const Options& o, Json& params) {
  if (o.p == 0) throw ParameterError("--p is required");
  require_prime(o.p);
  params["p"] = o.p;
  return o.p;
}

Mat2 parse_matrix_arg(const std::string& text, const char* flag) {
  std::vector<Rational> e;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) e.push_back(Rational::parse(item));
  if (e.size() != 4) {
    throw ParameterError(std::string(flag) +
                         " expects four comma-separated entries a11,a12,a21,a22");
  }
  return Mat2(e[0], e[1], e[2], e[3]);
}

std::vector<Prime> parse_primes(const std::string& text) {
  std::vector<Prime> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item[0] == '-') {
      throw ParameterError("bad prime \"" + item + "\"");
    }
    require_prime(p);
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json status_counts(const std::vector<uint64_t>& v) {
  Json j = Json::array();
  for (uint64_t x : v) j.push_back(x);
  return j;
}

struct Outcome {
  Json results = Json::array();
  Json witnesses = Json::array();
  int exit_code = kExitOk;
  std::optional<std::string> csv;  // replaces the JSON report when set
};

Outcome lu_knapp(const Options& o, Json& params) {
  const KnappResult k = knapp(require_q(o, params));
  Outcome out;
  Json r;
  r["verdict"] = k.discrete ? "Discrete" : "Indiscrete";
  r["cosine"] = to_json(k.cosine);
  if (k.discrete) r["n"] = k.n;
  out.results.push_back(std::move(r));
  return out;
}

Outcome lu_pingpong(const Options& o, Json& params) {
  const FreenessCertificate c = pingpong_certificate(require_q(o, params));
  Outcome out;
  Json r;
  r["certificate"] = to_string(c.kind);
  if (c.pingpong) {
    r["conjugator"] = to_json(c.pingpong->conjugator);
    r["lower_parameter"] = to_json(c.pingpong->lower_parameter);
    r["upper_parameter"] = to_json(c.pingpong->upper_parameter);
    r["sets"] = {"|z| < 1", "|z| > 1"};
  }
  out.results.push_back(std::move(r));
  return out;
}

Outcome lu_relators(const Options& o, Json& params) {
  const Rational q = require_q(o, params);
  const size_t max_len = o.max_len == 0 ? 12 : o.max_len;
  params["max_len"] = max_len;
  if (o.mem_cap != kUnlimitedMemory) params["mem_cap"] = o.mem_cap;
  const Alphabet alphabet = lu_generators(q);
  const RelatorSearchResult s =
      relator_search(alphabet, max_len, o.mem_cap, worker_count());
  Outcome out;
  Json r;
  r["status"] = to_string(s.status);
  r["verified_up_to"] = s.verified_up_to;
  r["deepest_half_length"] = s.deepest_half_length;
  if (s.relator) {
    r["relator"] = format_word(*s.relator, alphabet);
    r["length"] = s.relator->length();
    r["scalar"] = to_json(s.scalar);
    r["sl2_power"] = s.sl2_power;
    Json all = Json::array();
    for (const Word& w : s.shortest_relators) {
      all.push_back(format_word(w, alphabet));
      out.witnesses.push_back(witness_json(w, alphabet));
    }
    r["shortest_relators"] = std::move(all);
  }
  r["stats"] = {{"words_by_length", status_counts(s.stats.words_by_length)},
                {"images_by_length", status_counts(s.stats.images_by_length)},
                {"new_images_by_length",
                 status_counts(s.stats.new_images_by_length)},
                {"table_entries", s.stats.table_entries},
                {"table_bytes", s.stats.table_bytes}};
  out.results.push_back(std::move(r));
  if (s.status == SearchStatus::kInconclusive) out.exit_code = kExitInconclusive;
  return out;
}

Outcome tree_orbit(const Options& o, Json& params) {
  const Source src = load_source(o, params);
  const Prime p = require_p(o, params);
  params["radius"] = o.radius;
  const OrbitResult orbit = orbit_bounded(src.alphabet, p, o.radius);
  Outcome out;
  Json r;
  r["kind"] = to_string(orbit.kind);
  r["explored_radius"] = orbit.explored_radius;
  if (orbit.kind == OrbitResult::Kind::kBounded) {
    Json vs = Json::array();
    for (const TreeVertex& v : orbit.orbit) vs.push_back(v.str());
    r["orbit"] = std::move(vs);
    r["orbit_size"] = orbit.orbit.size();
  }
  if (orbit.witness) {
    r["witness"] = format_word(*orbit.witness, src.alphabet);
    r["witness_translation_length"] = orbit.witness_translation_length;
    out.witnesses.push_back(witness_json(*orbit.witness, src.alphabet, p));
  }
  out.results.push_back(std::move(r));
  if (orbit.kind == OrbitResult::Kind::kInconclusive) {
    out.exit_code = kExitInconclusive;
  }
  return out;
}

Outcome tree_length(const Options& o, Json& params) {
  const Source src = load_source(o, params);
  const Prime p = require_p(o, params);
  if (o.word.empty()) throw ParameterError("--word is required");
  const Word w = parse_word(o.word, src.alphabet);
  params["word"] = format_word(w, src.alphabet);
  const Mat2 m = evaluate(w, src.alphabet);
  const TreeVertex v0 = TreeVertex::base(p);
  Outcome out;
  Json r;
  r["word"] = format_word(w, src.alphabet);
  r["trace"] = to_json(m.trace());
  r["translation_length"] = translation_length(m, p);
  r["base_image"] = act(m, v0).str();
  r["base_displacement"] = distance(v0, act(m, v0));
  out.results.push_back(std::move(r));
  out.witnesses.push_back(witness_json(w, src.alphabet, p));
  return out;
}

Outcome diag_places(const Options& o, Json& params) {
  const Source src = load_source(o, params);
  const PlaceSupport s = place_support(src.alphabet);
  Outcome out;
  out.results.push_back({{"primes", s.primes}, {"includes_real", s.includes_real}});
  return out;
}

Json density_json(const DensityResult& d) {
  Json j;
  j["verdict"] = to_string(d.verdict);
  j["reason"] = to_string(d.reason);
  j["detail"] = d.detail;
  if (d.commutator_trace) j["commutator_trace"] = to_json(*d.commutator_trace);
  if (d.square_commutator_trace) {
    j["square_commutator_trace"] = to_json(*d.square_commutator_trace);
  }
  return j;
}

Outcome diag_density(const Options& o, Json& params) {
  const Source src = load_source(o, params);
  Outcome out;
  out.results.push_back(density_json(zariski_dense(src.alphabet)));
  return out;
}

Outcome diag_traces(const Options& o, Json& params) {
  const Source src = load_source(o, params);
  const size_t max_len = o.max_len == 0 ? 6 : o.max_len;
  params["max_len"] = max_len;
  const std::vector<Prime> primes = o.primes_given
                                        ? parse_primes(o.primes)
                                        : place_support(src.alphabet).primes;
  params["primes"] = primes;
  const TraceScanResult scan =
      integral_trace_scan(src.alphabet, primes, max_len, worker_count());
  Outcome out;
  Json hits = Json::array();
  std::string csv = "word,length,trace\n";
  for (const TraceHit& h : scan.hits) {
    const std::string word = format_word(h.word, src.alphabet);
    hits.push_back({{"word", word},
                    {"length", h.word.length()},
                    {"trace", h.trace.str()}});
    csv += word + "," + std::to_string(h.word.length()) + "," + h.trace.str() +
           "\n";
  }
  Json r;
  r["hits"] = std::move(hits);
  r["hit_count"] = scan.hits.size();
  r["classes_by_length"] = status_counts(scan.classes_by_length);
  r["hits_by_length"] = status_counts(scan.hits_by_length);
  out.results.push_back(std::move(r));
  if (o.format == "csv") out.csv = std::move(csv);
  return out;
}

Outcome diag_irreducible(const Options& o, Json& params) {
  const Source src = load_source(o, params);
  const size_t max_len = o.max_len == 0 ? 8 : o.max_len;
  params["max_len"] = max_len;
  params["radius"] = o.radius;
  const IrreducibilityReport rep =
      irreducibility_report(src.alphabet, max_len, o.radius, src.q);
  Outcome out;
  Json places = Json::array();
  for (const PlaceStatus& s : rep.places) {
    Json j;
    j["place"] = s.prime ? std::to_string(*s.prime) : "real";
    j["status"] = to_string(s.kind);
    j["justification"] = s.justification;
    if (s.witness) {
      j["witness"] = format_word(*s.witness, src.alphabet);
      out.witnesses.push_back(witness_json(*s.witness, src.alphabet, s.prime));
    }
    if (s.orbit) {
      j["orbit"] = to_string(s.orbit->kind);
      if (s.orbit->kind == OrbitResult::Kind::kBounded) {
        j["orbit_size"] = s.orbit->orbit.size();
      }
    }
    if (s.kind == PlaceStatus::Kind::kInconclusive) {
      out.exit_code = kExitInconclusive;
    }
    places.push_back(std::move(j));
  }
  Json r;
  r["places"] = std::move(places);
  r["primes"] = rep.support.primes;
  r["product_discrete"] = rep.product_discrete;
  r["product_justification"] = rep.product_justification;
  r["density"] = density_json(rep.density);
  r["conditional_notes"] = rep.conditional_notes;
  out.results.push_back(std::move(r));
  return out;
}

Outcome diag_probe(const Options& o, Json& params) {
  if (o.g.empty() || o.h.empty()) throw ParameterError("--g and --h are required");
  const Mat2 g = parse_matrix_arg(o.g, "--g");
  const Mat2 h = parse_matrix_arg(o.h, "--h");
  const Prime p = require_p(o, params);
  params["g"] = to_json(g);
  params["h"] = to_json(h);
  params["iterations"] = o.iterations;
  const ProbeReport rep = two_gen_probe(g, h, p, o.iterations);
  auto check = [](const ProbeReport::Check& c) {
    return Json{{"passed", c.passed}, {"witness", c.witness}};
  };
  Outcome out;
  Json r;
  r["loxodromic"] = check(rep.loxodromic);
  r["dense"] = check(rep.dense);
  r["commutators"] = check(rep.commutators);
  r["unbounded"] = check(rep.unbounded);
  Json d = Json::array();
  for (const Rational& x : rep.commutator_distances) d.push_back(x.str());
  r["commutator_distances"] = std::move(d);
  r["all_passed"] = rep.all_passed;
  if (rep.all_passed) r["message"] = rep.message;
  out.results.push_back(std::move(r));
  if (rep.unbounded_word) {
    const Alphabet pair({{"g", g}, {"h", h}});
    out.witnesses.push_back(witness_json(*rep.unbounded_word, pair, p));
  }
  return out;
}

Json error_object(const std::string& command, const std::string& kind,
                  const std::string& message) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Options o;
  CLI::App app{"Exact experiments with lattices in products of PGL2", "commlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  using Handler = std::function<Outcome(const Options&, Json&)>;
  std::vector<std::pair<CLI::App*, std::pair<std::string, Handler>>> leaves;

  auto add_source = [&](CLI::App* c) {
    c->add_option("--q", o.q, "Lyndon-Ullman parameter q (fraction)");
    c->add_option("--builtin", o.builtin, "built-in alphabet: long-reid");
    c->add_option("--gens", o.gens, "generator file (JSON)");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& help, Handler handler) {
    CLI::App* c = parent->add_subcommand(name, help);
    leaves.push_back({c, {parent->get_name() + " " + name, std::move(handler)}});
    return c;
  };

  CLI::App* lu = app.add_subcommand("lu", "Lyndon-Ullman groups Delta_q");
  lu->require_subcommand(1);
  leaf(lu, "knapp", "discreteness for 0 < |q| < 4", lu_knapp)
      ->add_option("--q", o.q, "parameter q")->required();
  leaf(lu, "pingpong", "freeness certificate for |q| >= 4", lu_pingpong)
      ->add_option("--q", o.q, "parameter q")->required();
  {
    CLI::App* c = leaf(lu, "relators", "shortest PGL2 relator", lu_relators);
    c->add_option("--q", o.q, "parameter q")->required();
    c->add_option("--max-len", o.max_len, "maximum relator length (12)");
    c->add_option("--mem-cap", o.mem_cap, "relator table cap in bytes");
  }

  CLI::App* tree = app.add_subcommand("tree", "Bruhat-Tits tree");
  tree->require_subcommand(1);
  {
    CLI::App* c = leaf(tree, "orbit", "is the orbit of v0 bounded", tree_orbit);
    add_source(c);
    c->add_option("--p", o.p, "prime")->required();
    c->add_option("--radius", o.radius, "search radius (6)");
  }
  {
    CLI::App* c = leaf(tree, "length", "translation length of a word",
                       tree_length);
    add_source(c);
    c->add_option("--p", o.p, "prime")->required();
    c->add_option("--word", o.word, "word, e.g. \"a b^-1\"")->required();
  }

  CLI::App* diag = app.add_subcommand("diag", "group diagnostics");
  diag->require_subcommand(1);
  add_source(leaf(diag, "places", "place support", diag_places));
  add_source(leaf(diag, "density", "Zariski density", diag_density));
  {
    CLI::App* c = leaf(diag, "traces", "integral-trace scan", diag_traces);
    add_source(c);
    c->add_option("--max-len", o.max_len, "maximum word length (6)");
    c->add_option("--primes", o.primes, "comma-separated primes");
    c->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  }
  {
    CLI::App* c = leaf(diag, "irreducible", "per-place discreteness report",
                       diag_irreducible);
    add_source(c);
    c->add_option("--max-len", o.max_len, "maximum witness length (8)");
    c->add_option("--radius", o.radius, "orbit search radius (6)");
  }
  {
    CLI::App* c = leaf(diag, "probe", "two-generator probe", diag_probe);
    c->set_help_flag("--help", "print this help message and exit");  // frees -h
    c->add_option("--g", o.g, "a11,a12,a21,a22")->required();
    c->add_option("--h", o.h, "a11,a12,a21,a22")->required();
    c->add_option("--p", o.p, "prime")->required();
    c->add_option("--iterations", o.iterations, "commutator iterations (5)");
  }

  std::string command;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help or --version.
      app.exit(e, out, out);
      return kExitOk;
    }
    err << "commlab: " << e.what() << "\n";
    out << dump(error_object("", "usage", e.what()));
    return kExitParameterError;
  }

  for (auto& [sub, entry] : leaves) {
    if (!sub->parsed()) continue;
    command = entry.first;
    if (sub->get_option_no_throw("--primes") != nullptr) {
      o.primes_given = sub->get_option("--primes")->count() > 0;
    }
    if (o.format != "json" && command != "diag traces") {
      out << dump(error_object(command, "parameter",
                               "--format csv is only supported by diag traces"));
      return kExitParameterError;
    }
    const auto start = std::chrono::steady_clock::now();
    Json params = Json::object();
    Outcome outcome;
    try {
      outcome = entry.second(o, params);
    } catch (const GeneratorFileError& e) {
      err << "commlab: " << e.what() << "\n";
      Json j = error_object(command, "generator_file", e.what());
      j["error"]["line"] = e.line();
      j["error"]["column"] = e.column();
      out << dump(j);
      return kExitParameterError;
    } catch (const ParameterError& e) {
      err << "commlab: " << e.what() << "\n";
      out << dump(error_object(command, "parameter", e.what()));
      return kExitParameterError;
    } catch (const BoundExceeded& e) {
      err << "commlab: " << e.what() << "\n";
      out << dump(error_object(command, "bound_exceeded", e.what()));
      return kExitInconclusive;
    }
    if (outcome.csv) {
      out << *outcome.csv;
      return outcome.exit_code;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    Json report;
    report["tool_version"] = kToolVersion;
    report["command"] = command;
    report["params"] = std::move(params);
    report["results"] = std::move(outcome.results);
    report["witnesses"] = std::move(outcome.witnesses);
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    out << dump(report);
    return outcome.exit_code;
  }
  out << dump(error_object("", "usage", "no subcommand"));
  return kExitParameterError;
}

}  // namespace commlab
