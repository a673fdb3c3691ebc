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

#pragma once

#include <array>
#include <string>
#include <vector>

namespace shuttlec::hardness {

/// A 3-partition instance: 3m weights that should split into m triples each
/// summing to `target`, with every weight strictly between target/4 and
/// target/2 (so any group summing to target has exactly three members).
struct ThreePartition {
  long long target = 0;
  std::vector<long long> weights;

  long long m() const { return static_cast<long long>(weights.size()) / 3; }
};

/// The offset multiset built from a 3-partition instance. Packing it into
/// |S| rungs with exactly 3m+1 shuttles is possible iff the instance is a
/// yes-instance, which is what makes the minimum-shuttle problem NP-hard.
///
/// Structure: chain i >= 1 is the full run {0 .. spread + a_i - 1} where
/// spread = max(a) - min(a). Chain 0 is an anchor whose span forces its own
/// placement: |c0| = m*spread + 1 elements ranging from base = |S| + target
/// up to 2|S| + target - 1 - |S| ... precisely from base to base + |S| - 1
/// with m holes of exactly target + 3*spread values, one per eventual
/// triple. |S| solves the self-referential size equation and comes out to
/// m*(target + 4*spread) + 1 independent of the weights' arrangement.
struct Reduction {
  ThreePartition instance;
  long long spread = 0;  // max(a) - min(a)
  long long size = 0;    // |S|, also the ladder length
  long long base = 0;    // size + target, the anchor chain's smallest element
  std::vector<std::vector<long long>> chains;  // chains[0] = anchor
  std::vector<long long> multiset;  // anchor first, then chains 1..3m
  std::vector<int> chain_of;        // multiset index -> chain index
};

/// Validates the instance (3m weights, sum m*target, strict window) and
/// builds the reduction. Throws std::invalid_argument naming the violation.
Reduction reduce(const ThreePartition& instance);

/// Structural checks on the anchor chain, reported per claim:
///   holes:       the anchor has exactly m holes, each target + 3*spread wide
///   ridges:      each hole is followed by a run of exactly `spread` values
///   separation:  base - max(other chains) > |S| - 2, so no other chain can
///                interleave with the anchor's span
///   uniqueness:  the non-anchor multiset decomposes into exactly 3m
///                hole-free chains of lengths {spread + a_i}
/// With spread == 0 the anchor is a single element; holes and ridges are
/// then vacuous and marked as passing with a note.
struct LemmaReport {
  bool holes_ok = false;
  bool ridges_ok = false;
  bool separation_ok = false;
  bool uniqueness_ok = false;
  std::vector<std::string> notes;

  bool all_ok() const {
    return holes_ok && ridges_ok && separation_ok && uniqueness_ok;
  }
};

LemmaReport verify_lemmas(const Reduction& r);

/// A solution triple: 1-based indices into instance.weights.
using Triple = std::array<int, 3>;

/// Builds the rung assignment realized by a claimed partition: the anchor at
/// its forced offset, triple t filling the t-th hole (by ascending rung).
/// Returns one rung per multiset element; the layout uses exactly 3m+1
/// shuttles. Throws if the triples are not a partition with equal sums.
std::vector<long long> pack_from_partition(const Reduction& r,
                                           const std::vector<Triple>& triples);

/// Reads a partition back out of a rung assignment. Refuses (ok = false,
/// message says why) any assignment that does not use exactly 3m+1 shuttles
/// or whose groups do not decompose into the canonical chains. Triple
/// indices are canonicalized: equal weights are matched smallest unused
/// index first.
struct ExtractResult {
  bool ok = false;
  std::string message;
  std::vector<Triple> triples;
};

ExtractResult extract_partition(const Reduction& r,
                                const std::vector<long long>& rung_of);

/// Distinct value+rung sums of an assignment (the shuttle count it realizes).
long long count_outputs(const Reduction& r,
                        const std::vector<long long>& rung_of);

}  // namespace shuttlec::hardness
