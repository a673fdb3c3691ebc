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

// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "shuttlec/ahr.hpp"
#include "shuttlec/chains.hpp"
#include "shuttlec/compile.hpp"
#include "shuttlec/css_codes.hpp"
#include "shuttlec/hardness.hpp"
#include "shuttlec/interweave.hpp"
#include "shuttlec/oracle.hpp"
#include "shuttlec/random_instances.hpp"
#include "shuttlec/rng.hpp"
#include "shuttlec/sssc.hpp"

namespace {

using shuttlec::Basis;
using shuttlec::CompileResult;
using shuttlec::CssCode;
using shuttlec::SyndromeCircuit;

struct Checker {
  std::ostringstream log;
  bool ok = true;

  // Requires a condition; on failure records one clause for the FAIL line.
  void require(bool condition, const std::string& clause) {
    if (condition) return;
    if (!log.str().empty()) log << "; ";
    log << clause;
    ok = false;
  }

  template <typename T, typename U>
  void equal(const T& actual, const U& expected, const std::string& what) {
    std::ostringstream clause;
    clause << what << " = " << actual << ", expected " << expected;
    require(actual == static_cast<T>(expected), clause.str());
  }
};

int run_criterion(int number, const std::string& title,
                  const std::function<void(Checker&)>& body,
                  double budget_seconds) {
  Checker checker;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(checker);
  } catch (const std::exception& e) {
    checker.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (budget_seconds > 0) {
    std::ostringstream clause;
    clause << "took " << elapsed << "s, budget " << budget_seconds << "s";
    checker.require(elapsed < budget_seconds, clause.str());
  }

  std::cout << (checker.ok ? "PASS" : "FAIL") << " criterion " << number
            << ": " << title;
  if (!checker.ok) {
    std::cout << " [" << checker.log.str() << "]";
  }
  std::cout << " (" << elapsed << "s)\n";
  return checker.ok ? 0 : 1;
}

CompileResult compile_basis(const CssCode& code, Basis basis,
                            shuttlec::CircuitStyle style) {
  const shuttlec::BitMatrix& checks = basis == Basis::x ? code.hx : code.hz;
  const SyndromeCircuit circuit =
      style == shuttlec::CircuitStyle::naive
          ? naive_circuit(checks, basis)
          : shor_circuit(checks, basis);
  return shuttlec::compile_best(circuit);
}

void expect_pack(Checker& c, const CssCode& code, Basis basis, int sssc,
                 int num_chains, long long blanks) {
  const CompileResult result =
      compile_basis(code, basis, shuttlec::CircuitStyle::shor);
  const std::string tag =
      code.name + "/" + std::string(1, shuttlec::basis_letter(basis));
  c.require(result.sssc.has_value(), tag + " packing did not apply");
  if (result.sssc) c.equal(result.sssc->shuttles(), sssc, tag + " packed");
  c.equal(result.num_chains, num_chains, tag + " chains");
  c.equal(result.blanks.blanks, blanks, tag + " blank sites");
}

}  // namespace

int main() {
  int failures = 0;

  failures += run_criterion(
      1, "distance-3 color-type code packs to three shuttles per basis",
      [](Checker& c) {
        const CssCode code = shuttlec::steane();
        expect_pack(c, code, Basis::x, 3, 3, 1);
        expect_pack(c, code, Basis::z, 3, 3, 1);
      },
      1.0);

  failures += run_criterion(
      2, "nine-qubit repetition-built code packs to (2, 4)",
      [](Checker& c) {
        const CssCode code = shuttlec::shor9();
        expect_pack(c, code, Basis::x, 2, 2, 0);
        expect_pack(c, code, Basis::z, 4, 2, 4);
      },
      1.0);

  failures += run_criterion(
      3, "column-regular families pack to exactly the column weight",
      [](Checker& c) {
        const auto timed = [&c](const std::string& name,
                                const std::function<void()>& work) {
          const auto start = std::chrono::steady_clock::now();
          work();
          const double elapsed = std::chrono::duration<double>(
                                     std::chrono::steady_clock::now() - start)
                                     .count();
          c.require(elapsed < 10.0, name + " missed its 10s budget");
        };
        timed("two-block 144", [&c] {
          const CssCode gross = shuttlec::bivariate_bicycle(
              12, 6, {{3, 0}, {0, 1}, {0, 2}}, {{0, 3}, {1, 0}, {2, 0}});
          expect_pack(c, gross, Basis::x, 3, 3, 0);
          expect_pack(c, gross, Basis::z, 3, 3, 0);
        });
        timed("two-block 48", [&c] {
          const CssCode gb = shuttlec::generalized_bicycle(
              24, {0, 2, 8, 15}, {0, 2, 12, 17});
          expect_pack(c, gb, Basis::x, 4, 4, 0);
          expect_pack(c, gb, Basis::z, 4, 4, 0);
        });

        shuttlec::Rng rng(2026);
        for (int i = 0; i < 200 && c.ok; ++i) {
          const int weight = rng.uniform(1, 5);
          const int cols = rng.uniform(2, 40);
          const int rows =
              rng.uniform(weight, std::min(weight + 6, cols * weight));
          const shuttlec::BitMatrix checks =
              shuttlec::random_column_regular_matrix(rng, rows, cols, weight);
          const SyndromeCircuit circuit = shor_circuit(checks, Basis::x);
          std::ostringstream tag;
          tag << "random column-regular #" << i << " (w=" << weight << ")";
          c.equal(shuttlec::sssc(circuit).shuttles(), weight, tag.str());
        }
      },
      20.0);

  failures += run_criterion(
      4, "lattice codes stay within the two-chain window",
      [](Checker& c) {
        for (int l = 3; l <= 5; ++l) {
          const CssCode codes[] = {shuttlec::toric2d(l),
                                   shuttlec::surface2d(l)};
          for (const CssCode& code : codes) {
            for (Basis basis : {Basis::x, Basis::z}) {
              const CompileResult result =
                  compile_basis(code, basis, shuttlec::CircuitStyle::shor);
              std::ostringstream tag;
              tag << code.name << "/" << shuttlec::basis_letter(basis);
              c.equal(result.num_chains, 2, tag.str() + " chains");
              c.require(result.sssc.has_value(),
                        tag.str() + " packing did not apply");
              if (!result.sssc) continue;
              const int packed = result.sssc->shuttles();
              c.require(packed >= 2, tag.str() + " packed below two");
              c.require(packed <= result.gate_shuffled,
                        tag.str() + " packing lost to gate shuffling");
            }
          }
        }
      },
      0.0);

  failures += run_criterion(
      5, "row-per-check distance-3 rounds settle at seven with re-indexing",
      [](Checker& c) {
        const CssCode code = shuttlec::steane();
        for (Basis basis : {Basis::x, Basis::z}) {
          const CompileResult result =
              compile_basis(code, basis, shuttlec::CircuitStyle::naive);
          const std::string tag =
              std::string("basis ") + shuttlec::basis_letter(basis);
          c.equal(result.ahr.shuttles(), 7, tag + " three-candidate pass");
        }
      },
      0.0);

  failures += run_criterion(
      6, "the 882-qubit product code packs both bases to seven",
      [](Checker& c) {
        const CssCode code = shuttlec::qcghp882();
        c.equal(code.n, std::size_t{882}, "qubit count");
        for (const shuttlec::BitMatrix* checks : {&code.hx, &code.hz}) {
          int weight3 = 0;
          int weight7 = 0;
          for (std::size_t col = 0; col < code.n; ++col) {
            const std::size_t w = checks->column_weight(col);
            if (w == 3) ++weight3;
            if (w == 7) ++weight7;
          }
          c.equal(weight3, 441, "weight-3 columns");
          c.equal(weight7, 441, "weight-7 columns");
        }
        for (Basis basis : {Basis::x, Basis::z}) {
          const CompileResult result =
              compile_basis(code, basis, shuttlec::CircuitStyle::shor);
          const std::string tag =
              std::string("basis ") + shuttlec::basis_letter(basis);
          c.equal(result.num_chains, 7, tag + " chains");
          c.require(result.sssc.has_value(), tag + " packing did not apply");
          if (result.sssc) c.equal(result.sssc->shuttles(), 7, tag + " packed");
        }
      },
      60.0);

  failures += run_criterion(
      7, "randomized rounds respect the exhaustive optimum",
      [](Checker& c) {
        shuttlec::Rng rng(424242);
        for (int i = 0; i < 500 && c.ok; ++i) {
          const int s = rng.uniform(1, 8);
          const int n = rng.uniform(2, 12);
          const SyndromeCircuit circuit =
              shuttlec::random_shor_style_circuit(rng, s, n);
          std::vector<int> offsets;
          for (const shuttlec::Gate& gate : circuit.gates) {
            offsets.push_back(circuit.n - gate.data);
          }
          const int bound = shuttlec::oracle::lower_bound(offsets);
          const int optimum = shuttlec::oracle::brute_force(circuit, 8).optimum;
          const int packed = shuttlec::sssc(circuit).shuttles();
          const int shuffled = shuttlec::gate_shuffle(circuit).shuttles();
          std::ostringstream tag;
          tag << "cat-state round #" << i << " (s=" << s << ", n=" << n << ")";
          c.require(bound <= optimum, tag.str() + ": bound above optimum");
          c.require(optimum <= packed, tag.str() + ": packing beat optimum");
          c.require(packed <= shuffled,
                    tag.str() + ": packing lost to shuffling");
        }
        for (int i = 0; i < 200 && c.ok; ++i) {
          const int s = rng.uniform(1, 7);
          const int n = rng.uniform(2, 10);
          const SyndromeCircuit circuit =
              shuttlec::random_naive_style_circuit(rng, s, n);
          const int optimum = shuttlec::oracle::brute_force(circuit, 7).optimum;
          const int heuristic = shuttlec::ahr(circuit).shuttles();
          std::ostringstream tag;
          tag << "row-per-check round #" << i << " (s=" << s << ", n=" << n
              << ")";
          c.require(optimum <= heuristic,
                    tag.str() + ": three-candidate pass beat the optimum");
        }
      },
      300.0);

  failures += run_criterion(
      8, "yes-instances traverse the reduction both ways",
      [](Checker& c) {
        shuttlec::Rng rng(77);
        for (int i = 0; i < 20 && c.ok; ++i) {
          const int m = rng.uniform(1, 3);
          const shuttlec::PlantedPartition planted =
              shuttlec::random_partition_instance(rng, m);
          const shuttlec::hardness::Reduction r =
              shuttlec::hardness::reduce(planted.instance);
          std::ostringstream tag;
          tag << "planted instance #" << i << " (m=" << m << ")";
          c.require(shuttlec::hardness::verify_lemmas(r).all_ok(),
                    tag.str() + ": structural claims failed");
          const std::vector<long long> rungs =
              shuttlec::hardness::pack_from_partition(r, planted.triples);
          c.equal(shuttlec::hardness::count_outputs(r, rungs), 3 * m + 1,
                  tag.str() + " shuttles");
          c.require(shuttlec::hardness::extract_partition(r, rungs).ok,
                    tag.str() + ": extraction refused the packing");
        }

        // Negative control: widening one anchor gap must fail the hole
        // check and say which hole.
        shuttlec::hardness::Reduction tampered =
            shuttlec::hardness::reduce({24, {7, 8, 9, 7, 8, 9}});
        tampered.chains[0][3] += 1;
        tampered.chains[0][4] += 1;
        const shuttlec::hardness::LemmaReport report =
            shuttlec::hardness::verify_lemmas(tampered);
        c.require(!report.holes_ok, "widened gap went unnoticed");
        const bool named = std::any_of(
            report.notes.begin(), report.notes.end(),
            [](const std::string& note) {
              return note.find("hole 2") != std::string::npos;
            });
        c.require(named, "hole check did not name the widened gap");
      },
      0.0);

  failures += run_criterion(
      9, "worked micro-examples behave exactly as designed",
      [](Checker& c) {
        // Three offsets 0, 2, 1: the layout (3, 1, 2) aligns all gates.
        const SyndromeCircuit circuit =
            shuttlec::circuit_from_offsets(3, {0, 2, 1});
        const SyndromeCircuit moved = shuttlec::apply_reindexing(
            circuit, shuttlec::Reindexing{{3, 1, 2}});
        c.equal(shuttlec::gate_shuffle(moved).shuttles(), 1,
                "aligned layout shuttles");

        // Repeat-grouped candidate ordering walks each repeat tier in
        // descending value order.
        const std::vector<int> offsets{3, 6, 1, 5, 0, 6, 4, 2, 6, 5, 1, 3};
        const shuttlec::PrimitiveSets sets = shuttlec::primitive_sets(
            shuttlec::circuit_from_offsets(7, offsets));
        const std::vector<int> order = shuttlec::ahr_candidate_order(sets, 3);
        std::vector<int> keys;
        for (int label : order) keys.push_back(offsets[label - 1]);
        const std::vector<int> expected{6, 5, 4, 3, 2, 1, 0, 6, 5, 3, 1, 6};
        c.require(keys == expected, "repeat-grouped key walk diverged");

        // Staging-row merge plan.
        const std::vector<std::vector<int>> batches =
            shuttlec::interweave_plan({5, 3, 1, 6, 4, 8, 7, 2});
        c.equal(batches.size(), 4u, "merge batches");
        const std::vector<std::vector<int>> expected_batches{
            {1, 2}, {3, 4}, {5, 6, 7}, {8}};
        c.require(batches == expected_batches, "merge batch contents diverged");
      },
      0.0);

  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
  } else {
    std::cout << failures << " acceptance criteria failed\n";
  }
  return failures;
}
