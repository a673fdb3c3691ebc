// Copyright 2026 The shuttlec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shuttlec/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "shuttlec/ahr.hpp"
#include "shuttlec/code_spec.hpp"
#include "shuttlec/compile.hpp"
#include "shuttlec/hardness.hpp"
#include "shuttlec/oracle.hpp"
#include "shuttlec/random_instances.hpp"
#include "shuttlec/report.hpp"
#include "shuttlec/rng.hpp"
#include "shuttlec/schedule_io.hpp"

namespace shuttlec::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

// Writes to --out when given, else to the session stream.
void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot write \"" + out_path + "\"");
  file << text;
}

struct CompileArgs {
  std::vector<std::string> codes;
  std::string style = "shor";
  std::string basis = "both";
  std::string format = "table";
  std::string out_path;
  bool pedagogical = false;
};

CircuitStyle parse_style(const std::string& style) {
  if (style == "naive") return CircuitStyle::naive;
  if (style == "shor") return CircuitStyle::shor;
  throw std::invalid_argument("style must be naive or shor");
}

int run_compile(const CompileArgs& args, std::ostream& out) {
  const CircuitStyle style = parse_style(args.style);
  const bool with_x = args.basis == "x" || args.basis == "both";
  const bool with_z = args.basis == "z" || args.basis == "both";
  if (!with_x && !with_z) {
    throw std::invalid_argument("basis must be x, z, or both");
  }

  // Targets compile in parallel; reports keep the input order.
  std::vector<std::future<CodeReport>> workers;
  workers.reserve(args.codes.size());
  for (const std::string& spec : args.codes) {
    workers.push_back(std::async(std::launch::async, [&, spec]() {
      const CssCode code = code_from_spec(spec);
      return args.pedagogical ? compile_combined_report(code, style)
                              : compile_code_report(code, style, with_x, with_z);
    }));
  }
  std::vector<CodeReport> reports;
  reports.reserve(workers.size());
  for (std::future<CodeReport>& worker : workers) {
    reports.push_back(worker.get());
  }

  std::ostringstream text;
  if (args.format == "table") {
    write_report_table(text, reports);
  } else if (args.format == "csv") {
    write_report_csv(text, reports);
  } else if (args.format == "json") {
    text << report_to_json(reports).dump(2) << '\n';
  } else {
    throw std::invalid_argument("format must be table, json, or csv");
  }
  emit(text.str(), args.out_path, out);
  return kOk;
}

struct ScheduleArgs {
  std::string code;
  std::string style = "shor";
  std::string basis = "x";
  std::string pass = "sssc";
  std::string format = "json";
  std::string out_path;
};

int run_schedule(const ScheduleArgs& args, std::ostream& out) {
  const CircuitStyle style = parse_style(args.style);
  Basis basis = Basis::x;
  if (args.basis == "z") {
    basis = Basis::z;
  } else if (args.basis != "x") {
    throw std::invalid_argument("basis must be x or z for schedules");
  }
  const CssCode code = code_from_spec(args.code);
  const BitMatrix& checks = basis == Basis::x ? code.hx : code.hz;
  const SyndromeCircuit circuit = style == CircuitStyle::naive
                                      ? naive_circuit(checks, basis)
                                      : shor_circuit(checks, basis);

  ScheduleDump dump;
  if (args.pass == "shuffle") {
    dump = dump_schedule("shuffle", gate_shuffle(circuit));
  } else if (args.pass == "ahr") {
    dump = dump_schedule("ahr", ahr(circuit).schedule);
  } else if (args.pass == "sssc") {
    dump = dump_schedule("sssc", sssc(circuit).schedule);
  } else if (args.pass == "blanks") {
    dump = dump_blanks(blanks_schedule(circuit));
  } else {
    throw std::invalid_argument("pass must be shuffle, ahr, sssc, or blanks");
  }

  std::ostringstream text;
  if (args.format == "json") {
    text << schedule_to_json(dump).dump(2) << '\n';
  } else if (args.format == "table") {
    write_schedule_text(text, dump);
  } else {
    throw std::invalid_argument("format must be json or table");
  }
  emit(text.str(), args.out_path, out);
  return kOk;
}

struct VerifyArgs {
  int random = 200;
  int max_s = 7;
  std::uint64_t seed = 1;
};

int run_verify(const VerifyArgs& args, std::ostream& out) {
  if (args.random < 1) throw std::invalid_argument("--random must be positive");
  if (args.max_s < 1) throw std::invalid_argument("--max-s must be positive");
  const int oracle_limit = oracle::default_limit();
  Rng rng(args.seed);
  int violations = 0;

  const auto report_violation = [&](const std::string& what,
                                    const SyndromeCircuit& circuit) {
    ++violations;
    out << "violation: " << what << '\n';
    std::ostringstream dump;
    write_circuit(dump, circuit);
    out << dump.str();
  };

  // Battery 1: cat-state-style rounds. The exhaustive optimum must sit
  // between the multiset lower bound and every heuristic, and ladder packing
  // must never lose to plain gate shuffling.
  for (int i = 0; i < args.random; ++i) {
    const int s = rng.uniform(1, args.max_s);
    const int n = rng.uniform(2, 12);
    const SyndromeCircuit circuit = random_shor_style_circuit(rng, s, n);
    const PrimitiveSets sets = primitive_sets(circuit);
    std::vector<int> values;
    for (const std::vector<int>& set : sets.sets) values.push_back(set.front());
    const int bound = oracle::lower_bound(values);
    const int shuffled = gate_shuffle(circuit).shuttles();
    const int packed = sssc(circuit).shuttles();
    if (packed > shuffled) {
      report_violation("ladder packing lost to gate shuffling", circuit);
    }
    if (s <= oracle_limit) {
      const int optimum = oracle::brute_force(sets, oracle_limit).optimum;
      if (bound > optimum || optimum > packed) {
        report_violation("optimum left the lower-bound..packed window",
                         circuit);
      }
      if (optimum > ahr(circuit).shuttles()) {
        report_violation("three-candidate pass beat the exhaustive optimum",
                         circuit);
      }
    }
    if (shuffled > uncompiled_shuttles(circuit)) {
      report_violation("grouping lost to the uncompiled order", circuit);
    }
  }
  out << "battery 1 (cat-state rounds): " << args.random << " instances\n";

  // Battery 2: row-per-check rounds; only the generic bounds apply.
  for (int i = 0; i < args.random; ++i) {
    const int s = rng.uniform(1, std::min(args.max_s, oracle_limit));
    const int n = rng.uniform(2, 10);
    const SyndromeCircuit circuit = random_naive_style_circuit(rng, s, n);
    const int optimum = oracle::brute_force(circuit, oracle_limit).optimum;
    const int shuffled = gate_shuffle(circuit).shuttles();
    if (optimum > ahr(circuit).shuttles() || optimum > shuffled) {
      report_violation("a heuristic undercut the exhaustive optimum", circuit);
    }
    if (shuffled > uncompiled_shuttles(circuit)) {
      report_violation("grouping lost to the uncompiled order", circuit);
    }
  }
  out << "battery 2 (row-per-check rounds): " << args.random << " instances\n";

  // Battery 3: column-regular matrices pack to exactly the column weight.
  for (int i = 0; i < args.random; ++i) {
    const int weight = rng.uniform(1, 5);
    const int n = rng.uniform(2, 40);
    const int rows = rng.uniform(weight, std::min(weight + 6, n * weight));
    const BitMatrix checks = random_column_regular_matrix(rng, rows, n, weight);
    const SyndromeCircuit circuit = shor_circuit(checks, Basis::x);
    const int packed = sssc(circuit).shuttles();
    if (packed != weight) {
      report_violation("column-regular matrix missed the weight target",
                       circuit);
    }
  }
  out << "battery 3 (column-regular matrices): " << args.random
      << " instances\n";

  if (violations != 0) {
    out << "FAIL: " << violations << " violation(s)\n";
    return kVerificationFailed;
  }
  out << "all batteries passed\n";
  return kOk;
}

struct ReduceArgs {
  std::string instance_path;
  std::string partition_path;
  std::string out_path;
  bool demo = false;
};

hardness::ThreePartition read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  std::vector<long long> numbers;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream tokens(line);
    long long value = 0;
    while (tokens >> value) numbers.push_back(value);
  }
  if (numbers.size() < 4) {
    throw std::runtime_error(
        "instance file needs a target followed by 3m weights");
  }
  hardness::ThreePartition instance;
  instance.target = numbers.front();
  instance.weights.assign(numbers.begin() + 1, numbers.end());
  return instance;
}

std::vector<hardness::Triple> read_partition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  std::vector<hardness::Triple> triples;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream tokens(line);
    hardness::Triple triple{};
    if (!(tokens >> triple[0] >> triple[1] >> triple[2])) {
      throw std::runtime_error("partition lines need three indices");
    }
    triples.push_back(triple);
  }
  return triples;
}

int run_reduce(const ReduceArgs& args, std::ostream& out) {
  hardness::ThreePartition instance;
  std::vector<hardness::Triple> triples;
  if (args.demo) {
    instance.target = 20;
    instance.weights = {6, 7, 7, 6, 7, 7};
    triples = {{1, 2, 3}, {4, 5, 6}};
  } else {
    instance = read_instance_file(args.instance_path);
  }
  if (!args.partition_path.empty()) {
    triples = read_partition_file(args.partition_path);
  }

  const hardness::Reduction reduction = hardness::reduce(instance);
  const hardness::LemmaReport lemmas = hardness::verify_lemmas(reduction);

  nlohmann::json root;
  root["m"] = instance.m();
  root["target"] = instance.target;
  root["weights"] = instance.weights;
  root["spread"] = reduction.spread;
  root["size"] = reduction.size;
  root["base"] = reduction.base;
  root["multiset"] = reduction.multiset;
  root["lemmas"] = {{"holes", lemmas.holes_ok},
                    {"ridges", lemmas.ridges_ok},
                    {"separation", lemmas.separation_ok},
                    {"uniqueness", lemmas.uniqueness_ok},
                    {"notes", lemmas.notes}};
  if (!triples.empty()) {
    const std::vector<long long> rungs =
        hardness::pack_from_partition(reduction, triples);
    const hardness::ExtractResult extracted =
        hardness::extract_partition(reduction, rungs);
    root["pack"] = {{"shuttles", hardness::count_outputs(reduction, rungs)},
                    {"rungs", rungs}};
    nlohmann::json recovered = nlohmann::json::array();
    for (const hardness::Triple& t : extracted.triples) {
      recovered.push_back({t[0], t[1], t[2]});
    }
    root["extract"] = {{"ok", extracted.ok},
                       {"message", extracted.message},
                       {"triples", recovered}};
  }
  emit(root.dump(2) + "\n", args.out_path, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Shuttle-schedule compiler for two-row quantum-dot arrays"};
  app.require_subcommand(1);

  CompileArgs compile_args;
  CLI::App* compile = app.add_subcommand(
      "compile", "Run every pass over one or more codes and report counts");
  compile->add_option("--code", compile_args.codes,
                      "Code target (repeatable); see code_from_spec grammar")
      ->required();
  compile->add_option("--style", compile_args.style, "naive or shor");
  CLI::Option* basis_option =
      compile->add_option("--basis", compile_args.basis, "x, z, or both");
  compile->add_option("--format", compile_args.format, "table, json, or csv");
  compile->add_option("--out", compile_args.out_path, "Write to a file");
  compile
      ->add_flag("--pedagogical-combined", compile_args.pedagogical,
                 "Compile X and Z checks as one mixed round")
      ->excludes(basis_option);

  ScheduleArgs schedule_args;
  CLI::App* schedule = app.add_subcommand(
      "schedule", "Emit the full schedule of one pass over one code");
  schedule->add_option("--code", schedule_args.code, "Code target")->required();
  schedule->add_option("--style", schedule_args.style, "naive or shor");
  schedule->add_option("--basis", schedule_args.basis, "x or z");
  schedule->add_option("--pass", schedule_args.pass,
                       "shuffle, ahr, sssc, or blanks");
  schedule->add_option("--format", schedule_args.format, "json or table");
  schedule->add_option("--out", schedule_args.out_path, "Write to a file");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Randomized cross-checks of the passes against ground truth");
  verify->add_option("--random", verify_args.random, "Instances per battery");
  verify->add_option("--max-s", verify_args.max_s, "Largest ancilla count");
  verify->add_option("--seed", verify_args.seed, "Batch seed");

  ReduceArgs reduce_args;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "Build the 3-partition offset multiset and check its shape");
  CLI::Option* instance_option = reduce->add_option(
      "--instance", reduce_args.instance_path, "Target line plus 3m weights");
  reduce->add_flag("--demo", reduce_args.demo, "Use a built-in yes-instance")
      ->excludes(instance_option);
  reduce->add_option("--partition", reduce_args.partition_path,
                     "Claimed triples, three indices per line");
  reduce->add_option("--out", reduce_args.out_path, "Write to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (compile->parsed()) return run_compile(compile_args, out);
    if (schedule->parsed()) return run_schedule(schedule_args, out);
    if (verify->parsed()) return run_verify(verify_args, out);
    if (reduce->parsed()) {
      if (!reduce_args.demo && reduce_args.instance_path.empty()) {
        throw std::invalid_argument("reduce needs --instance or --demo");
      }
      return run_reduce(reduce_args, out);
    }
    err << "no subcommand selected\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace shuttlec::cli
