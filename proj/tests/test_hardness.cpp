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

#include "shuttlec/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "shuttlec/oracle.hpp"
#include "shuttlec/random_instances.hpp"
#include "shuttlec/rng.hpp"

using shuttlec::hardness::ExtractResult;
using shuttlec::hardness::LemmaReport;
using shuttlec::hardness::Reduction;
using shuttlec::hardness::ThreePartition;
using shuttlec::hardness::Triple;

namespace {

bool notes_mention(const LemmaReport& report, const std::string& needle) {
  return std::any_of(report.notes.begin(), report.notes.end(),
                     [&](const std::string& note) {
                       return note.find(needle) != std::string::npos;
                     });
}

}  // namespace

TEST_CASE("spread-1 instance builds the expected anchor") {
  const Reduction r =
      shuttlec::hardness::reduce({20, {6, 7, 7, 6, 7, 7}});
  CHECK(r.spread == 1);
  CHECK(r.size == 49);
  CHECK(r.base == 69);
  CHECK(r.chains[0] == std::vector<long long>{69, 93, 117});
  CHECK(r.chains.size() == 7);
  CHECK(r.chains[1].size() == 7);   // spread + 6
  CHECK(r.chains[2].size() == 8);   // spread + 7
  CHECK(static_cast<long long>(r.multiset.size()) == r.size);
  CHECK(r.chain_of.front() == 0);
  CHECK(r.chain_of.back() == 6);
  CHECK(shuttlec::hardness::verify_lemmas(r).all_ok());
}

TEST_CASE("spread-2 instance builds the expected anchor") {
  const Reduction r =
      shuttlec::hardness::reduce({24, {7, 8, 9, 7, 8, 9}});
  CHECK(r.spread == 2);
  CHECK(r.size == 65);
  CHECK(r.base == 89);
  CHECK(r.chains[0] == std::vector<long long>{89, 120, 121, 152, 153});
  const LemmaReport lemmas = shuttlec::hardness::verify_lemmas(r);
  CHECK(lemmas.holes_ok);
  CHECK(lemmas.ridges_ok);
  CHECK(lemmas.separation_ok);
  CHECK(lemmas.uniqueness_ok);
  CHECK(lemmas.notes.empty());
}

TEST_CASE("instance validation names the offending weight") {
  CHECK_THROWS_WITH_AS(
      shuttlec::hardness::reduce({20, {6, 7}}),
      doctest::Contains("3m weights"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      shuttlec::hardness::reduce({20, {4, 4, 12}}),
      doctest::Contains("weight 1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      shuttlec::hardness::reduce({20, {6, 7, 7, 6, 7, 6}}),
      doctest::Contains("sum"), std::invalid_argument);
  // The window is strict: a weight exactly at target/4 is rejected.
  CHECK_THROWS_AS(shuttlec::hardness::reduce({12, {3, 4, 5, 3, 4, 5}}),
                  std::invalid_argument);
}

TEST_CASE("a widened anchor gap fails the hole check by name") {
  Reduction r = shuttlec::hardness::reduce({24, {7, 8, 9, 7, 8, 9}});
  // Shift the last ridge up by one rung: hole 2 widens from 30 to 31.
  r.chains[0][3] += 1;
  r.chains[0][4] += 1;
  const LemmaReport lemmas = shuttlec::hardness::verify_lemmas(r);
  CHECK_FALSE(lemmas.holes_ok);
  CHECK(notes_mention(lemmas, "hole 2"));
  CHECK_FALSE(lemmas.all_ok());
}

TEST_CASE("packing a claimed partition yields 3m+1 shuttles that extract") {
  const Reduction r =
      shuttlec::hardness::reduce({20, {6, 7, 7, 6, 7, 7}});
  const std::vector<Triple> triples{{1, 2, 3}, {4, 5, 6}};
  const std::vector<long long> rungs =
      shuttlec::hardness::pack_from_partition(r, triples);
  CHECK(shuttlec::hardness::count_outputs(r, rungs) == 7);

  const ExtractResult extracted =
      shuttlec::hardness::extract_partition(r, rungs);
  REQUIRE(extracted.ok);
  CHECK(extracted.triples == triples);
}

TEST_CASE("extraction canonicalizes the triple order") {
  const Reduction r =
      shuttlec::hardness::reduce({24, {7, 8, 9, 7, 8, 9}});
  // Feed the holes in swapped order; equal weights match smallest unused
  // index first, so the canonical triples come back regardless.
  const std::vector<long long> rungs = shuttlec::hardness::pack_from_partition(
      r, {{4, 5, 6}, {1, 2, 3}});
  const ExtractResult extracted =
      shuttlec::hardness::extract_partition(r, rungs);
  REQUIRE(extracted.ok);
  CHECK(extracted.triples == std::vector<Triple>{{1, 2, 3}, {4, 5, 6}});
}

TEST_CASE("pack_from_partition validates the claimed triples") {
  const Reduction r =
      shuttlec::hardness::reduce({20, {6, 7, 7, 6, 7, 7}});
  CHECK_THROWS_AS(
      shuttlec::hardness::pack_from_partition(r, {{1, 2, 3}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      shuttlec::hardness::pack_from_partition(r, {{1, 2, 3}, {3, 5, 6}}),
      std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      shuttlec::hardness::pack_from_partition(r, {{1, 2, 4}, {3, 5, 6}}),
      doctest::Contains("sums to"), std::invalid_argument);
}

TEST_CASE("an arbitrary bijection is refused with a shuttle count") {
  const Reduction r =
      shuttlec::hardness::reduce({20, {6, 7, 7, 6, 7, 7}});
  std::vector<long long> rungs(r.multiset.size());
  std::iota(rungs.begin(), rungs.end(), 1);
  const ExtractResult extracted =
      shuttlec::hardness::extract_partition(r, rungs);
  CHECK_FALSE(extracted.ok);
  CHECK(extracted.message.find("shuttles") != std::string::npos);
}

TEST_CASE("degenerate equal-weight instance still reduces and packs") {
  const Reduction r = shuttlec::hardness::reduce({6, {2, 2, 2}});
  CHECK(r.spread == 0);
  CHECK(r.size == 7);
  CHECK(r.chains[0] == std::vector<long long>{13});
  const LemmaReport lemmas = shuttlec::hardness::verify_lemmas(r);
  CHECK(lemmas.all_ok());
  CHECK(notes_mention(lemmas, "vacuous"));

  const std::vector<long long> rungs =
      shuttlec::hardness::pack_from_partition(r, {{1, 2, 3}});
  CHECK(shuttlec::hardness::count_outputs(r, rungs) == 4);
  CHECK(shuttlec::hardness::extract_partition(r, rungs).ok);

  // Small enough to exhaust: the reduction's optimum really is 3m+1.
  std::vector<int> offsets;
  for (long long v : r.multiset) offsets.push_back(static_cast<int>(v));
  const shuttlec::SyndromeCircuit circuit =
      shuttlec::circuit_from_offsets(14, offsets);
  CHECK(shuttlec::oracle::brute_force(circuit).optimum == 4);
}

TEST_CASE("random planted instances round-trip through the reduction") {
  shuttlec::Rng rng(29);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = rng.uniform(1, 3);
    const shuttlec::PlantedPartition planted =
        shuttlec::random_partition_instance(rng, m);
    const Reduction r = shuttlec::hardness::reduce(planted.instance);
    CHECK(shuttlec::hardness::verify_lemmas(r).all_ok());

    const std::vector<long long> rungs =
        shuttlec::hardness::pack_from_partition(r, planted.triples);
    CHECK(shuttlec::hardness::count_outputs(r, rungs) == 3 * m + 1);

    const ExtractResult extracted =
        shuttlec::hardness::extract_partition(r, rungs);
    REQUIRE(extracted.ok);

    // The recovered triples form a partition with the right sums; they may
    // differ from the planted ones when weights repeat.
    std::vector<bool> used(planted.instance.weights.size(), false);
    for (const Triple& triple : extracted.triples) {
      long long sum = 0;
      for (int index : triple) {
        CHECK_FALSE(used[static_cast<std::size_t>(index - 1)]);
        used[static_cast<std::size_t>(index - 1)] = true;
        sum += planted.instance.weights[static_cast<std::size_t>(index - 1)];
      }
      CHECK(sum == planted.instance.target);
    }
  }
}
