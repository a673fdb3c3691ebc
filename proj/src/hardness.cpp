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
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "shuttlec/chains.hpp"

namespace shuttlec::hardness {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw std::invalid_argument(what);
}

void validate_instance(const ThreePartition& instance) {
  if (instance.weights.empty() || instance.weights.size() % 3 != 0) {
    invalid("a 3-partition instance needs 3m weights");
  }
  if (instance.target < 1) invalid("target must be positive");
  long long sum = 0;
  for (std::size_t i = 0; i < instance.weights.size(); ++i) {
    const long long a = instance.weights[i];
    // Strict window target/4 < a < target/2, kept in integers.
    if (4 * a <= instance.target || 2 * a >= instance.target) {
      std::ostringstream msg;
      msg << "weight " << (i + 1) << " (" << a
          << ") is outside the open window (" << instance.target << "/4, "
          << instance.target << "/2)";
      invalid(msg.str());
    }
    sum += a;
  }
  if (sum != instance.m() * instance.target) {
    std::ostringstream msg;
    msg << "weights sum to " << sum << ", expected m*target = "
        << instance.m() * instance.target;
    invalid(msg.str());
  }
}

// Start offset of each chain's elements inside the flattened multiset.
std::vector<std::size_t> chain_offsets(const Reduction& r) {
  std::vector<std::size_t> offsets(r.chains.size());
  std::size_t cursor = 0;
  for (std::size_t c = 0; c < r.chains.size(); ++c) {
    offsets[c] = cursor;
    cursor += r.chains[c].size();
  }
  return offsets;
}

}  // namespace

Reduction reduce(const ThreePartition& instance) {
  validate_instance(instance);
  Reduction r;
  r.instance = instance;
  const long long m = instance.m();
  const long long t = instance.target;
  const auto [lo, hi] =
      std::minmax_element(instance.weights.begin(), instance.weights.end());
  r.spread = *hi - *lo;
  // |S| is self-referential (the anchor's largest elements are defined in
  // terms of |S|); the fixed point is closed-form and weight-independent.
  r.size = m * (t + 4 * r.spread) + 1;
  r.base = r.size + t;

  std::vector<long long> anchor{r.base};
  for (long long i = 1; i <= m; ++i) {
    for (long long j = 1; j <= r.spread; ++j) {
      anchor.push_back(i * (t + 3 * r.spread) + j + r.spread * (i - 1) +
                       r.base);
    }
  }
  r.chains.push_back(std::move(anchor));
  for (long long a : instance.weights) {
    std::vector<long long> chain(static_cast<std::size_t>(r.spread + a));
    for (std::size_t v = 0; v < chain.size(); ++v) {
      chain[v] = static_cast<long long>(v);
    }
    r.chains.push_back(std::move(chain));
  }

  for (std::size_t c = 0; c < r.chains.size(); ++c) {
    for (long long v : r.chains[c]) {
      r.multiset.push_back(v);
      r.chain_of.push_back(static_cast<int>(c));
    }
  }
  if (static_cast<long long>(r.multiset.size()) != r.size) {
    throw std::logic_error("reduction multiset size disagrees with |S|");
  }
  return r;
}

LemmaReport verify_lemmas(const Reduction& r) {
  LemmaReport report;
  const long long m = r.instance.m();
  const long long t = r.instance.target;
  const long long hole_width = t + 3 * r.spread;
  const std::vector<long long>& anchor = r.chains.at(0);

  if (r.spread == 0) {
    report.holes_ok = true;
    report.ridges_ok = true;
    report.notes.push_back(
        "spread is 0: the anchor is a single element, hole and ridge "
        "structure is vacuous");
  } else {
    // One scan collects the hole widths and the value runs between them:
    // runs[0] is the lead run, runs[g] the ridge after hole g.
    std::vector<long long> hole_sizes;
    std::vector<long long> runs{1};
    for (std::size_t i = 1; i < anchor.size(); ++i) {
      const long long width = anchor[i] - anchor[i - 1] - 1;
      if (width < 0) {
        report.notes.push_back("anchor values are not strictly increasing");
        return report;
      }
      if (width > 0) {
        hole_sizes.push_back(width);
        runs.push_back(1);
      } else {
        ++runs.back();
      }
    }

    report.holes_ok = static_cast<long long>(hole_sizes.size()) == m;
    if (!report.holes_ok) {
      std::ostringstream msg;
      msg << "anchor has " << hole_sizes.size() << " holes, expected " << m;
      report.notes.push_back(msg.str());
    }
    for (std::size_t g = 0; g < hole_sizes.size(); ++g) {
      if (hole_sizes[g] != hole_width) {
        report.holes_ok = false;
        std::ostringstream msg;
        msg << "hole " << (g + 1) << " spans " << hole_sizes[g]
            << " values, expected " << hole_width;
        report.notes.push_back(msg.str());
      }
    }

    // Ridges: a single lead element, then exactly `spread` values after
    // every hole.
    bool ridges_ok = anchor.front() == r.base;
    if (!ridges_ok) report.notes.push_back("anchor does not start at base");
    if (runs.front() != 1) {
      ridges_ok = false;
      std::ostringstream msg;
      msg << "anchor lead run has " << runs.front()
          << " values, expected a single element";
      report.notes.push_back(msg.str());
    }
    for (std::size_t g = 1; g < runs.size(); ++g) {
      if (runs[g] != r.spread) {
        ridges_ok = false;
        std::ostringstream msg;
        msg << "ridge after hole " << g << " has " << runs[g]
            << " values, expected " << r.spread;
        report.notes.push_back(msg.str());
      }
    }
    report.ridges_ok = ridges_ok;
  }

  // Separation: the anchor's smallest element is so far above every other
  // value that no other chain can contribute to the anchor's output.
  long long max_other = std::numeric_limits<long long>::min();
  for (std::size_t c = 1; c < r.chains.size(); ++c) {
    for (long long v : r.chains[c]) max_other = std::max(max_other, v);
  }
  report.separation_ok = anchor.front() - max_other > r.size - 2;
  if (!report.separation_ok) {
    std::ostringstream msg;
    msg << "separation margin " << (anchor.front() - max_other)
        << " does not exceed |S|-2 = " << (r.size - 2);
    report.notes.push_back(msg.str());
  }

  // Uniqueness: the non-anchor values decompose into exactly 3m hole-free
  // chains whose lengths are {spread + a_i}; no other hole-free cover of
  // that multiset exists.
  std::vector<int> values;
  for (std::size_t c = 1; c < r.chains.size(); ++c) {
    for (long long v : r.chains[c]) {
      if (v > std::numeric_limits<int>::max()) {
        report.notes.push_back("chain values exceed the packer's range");
        return report;
      }
      values.push_back(static_cast<int>(v));
    }
  }
  const ChainSet packed = make_chains(values);
  bool uniqueness_ok =
      static_cast<long long>(packed.size()) == 3 * m &&
      std::all_of(packed.begin(), packed.end(),
                  [](const Chain& c) { return c.gap_free(); });
  if (uniqueness_ok) {
    std::multiset<long long> expected;
    for (long long a : r.instance.weights) expected.insert(r.spread + a);
    std::multiset<long long> actual;
    for (const Chain& c : packed) {
      actual.insert(static_cast<long long>(c.span()));
    }
    uniqueness_ok = expected == actual;
  }
  report.uniqueness_ok = uniqueness_ok;
  if (!uniqueness_ok) {
    report.notes.push_back(
        "non-anchor values do not decompose into the 3m expected hole-free "
        "chains");
  }
  return report;
}

std::vector<long long> pack_from_partition(const Reduction& r,
                                           const std::vector<Triple>& triples) {
  const long long m = r.instance.m();
  const long long t = r.instance.target;
  if (static_cast<long long>(triples.size()) != m) {
    invalid("expected exactly m triples");
  }
  std::vector<bool> used(r.instance.weights.size(), false);
  for (const Triple& triple : triples) {
    long long sum = 0;
    for (int index : triple) {
      if (index < 1 || static_cast<std::size_t>(index) > used.size()) {
        invalid("triple index out of range");
      }
      if (used[static_cast<std::size_t>(index - 1)]) {
        invalid("triple index used twice");
      }
      used[static_cast<std::size_t>(index - 1)] = true;
      sum += r.instance.weights[static_cast<std::size_t>(index - 1)];
    }
    if (sum != t) {
      std::ostringstream msg;
      msg << "triple sums to " << sum << ", expected " << t;
      invalid(msg.str());
    }
  }

  const std::vector<std::size_t> offsets = chain_offsets(r);
  std::vector<long long> rung_of(r.multiset.size(), 0);
  std::vector<bool> occupied(static_cast<std::size_t>(r.size) + 1, false);

  // Anchor placement. With spread > 0 the anchor spans the whole ladder and
  // its offset is forced: every element lands at rung u - value with
  // u = 2|S| + target. A single-element anchor is pinned to rung 1.
  const std::vector<long long>& anchor = r.chains[0];
  const long long u = r.spread > 0 ? 2 * r.size + t : r.base + 1;
  for (std::size_t e = 0; e < anchor.size(); ++e) {
    const long long rung = u - anchor[e];
    rung_of[offsets[0] + e] = rung;
    occupied[static_cast<std::size_t>(rung)] = true;
  }

  // Free rungs form m intervals of exactly target + 3*spread each.
  std::vector<std::pair<long long, long long>> intervals;
  long long cursor = 1;
  while (cursor <= r.size) {
    if (occupied[static_cast<std::size_t>(cursor)]) {
      ++cursor;
      continue;
    }
    long long end = cursor;
    while (end + 1 <= r.size && !occupied[static_cast<std::size_t>(end + 1)]) {
      ++end;
    }
    intervals.emplace_back(cursor, end);
    cursor = end + 1;
  }
  if (r.spread == 0) {
    // One contiguous stretch; cut it into m synthetic holes of target rungs.
    std::vector<std::pair<long long, long long>> cut;
    for (const auto& [lo, hi] : intervals) {
      long long at = lo;
      while (at <= hi) {
        cut.emplace_back(at, std::min(hi, at + t - 1));
        at += t;
      }
    }
    intervals = std::move(cut);
  }
  if (static_cast<long long>(intervals.size()) != m) {
    throw std::logic_error("anchor placement produced the wrong hole count");
  }
  for (const auto& [lo, hi] : intervals) {
    if (hi - lo + 1 != t + 3 * r.spread) {
      throw std::logic_error("anchor hole has the wrong width");
    }
  }

  for (std::size_t g = 0; g < triples.size(); ++g) {
    long long at = intervals[g].first;
    for (int index : triples[g]) {
      const std::size_t chain_id = static_cast<std::size_t>(index);
      const std::vector<long long>& chain = r.chains[chain_id];
      const long long len = static_cast<long long>(chain.size());
      // Descending values on ascending rungs keep value + rung constant.
      for (std::size_t e = 0; e < chain.size(); ++e) {
        rung_of[offsets[chain_id] + e] = at + (len - 1 - chain[e]);
      }
      at += len;
    }
    if (at != intervals[g].second + 1) {
      throw std::logic_error("triple does not exactly fill its hole");
    }
  }

  if (count_outputs(r, rung_of) != 3 * m + 1) {
    throw std::logic_error("partition packing missed the 3m+1 target");
  }
  return rung_of;
}

long long count_outputs(const Reduction& r,
                        const std::vector<long long>& rung_of) {
  if (rung_of.size() != r.multiset.size()) {
    invalid("rung assignment size does not match the multiset");
  }
  std::set<long long> outputs;
  for (std::size_t e = 0; e < rung_of.size(); ++e) {
    outputs.insert(r.multiset[e] + rung_of[e]);
  }
  return static_cast<long long>(outputs.size());
}

ExtractResult extract_partition(const Reduction& r,
                                const std::vector<long long>& rung_of) {
  ExtractResult result;
  const long long m = r.instance.m();
  const long long t = r.instance.target;
  if (rung_of.size() != r.multiset.size()) {
    result.message = "rung assignment size does not match the multiset";
    return result;
  }
  std::vector<bool> seen(static_cast<std::size_t>(r.size) + 1, false);
  for (long long rung : rung_of) {
    if (rung < 1 || rung > r.size || seen[static_cast<std::size_t>(rung)]) {
      result.message = "rung assignment is not a bijection onto 1..|S|";
      return result;
    }
    seen[static_cast<std::size_t>(rung)] = true;
  }

  std::map<long long, std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < rung_of.size(); ++e) {
    groups[r.multiset[e] + rung_of[e]].push_back(e);
  }
  if (static_cast<long long>(groups.size()) != 3 * m + 1) {
    std::ostringstream msg;
    msg << "assignment uses " << groups.size() << " shuttles, expected "
        << (3 * m + 1);
    result.message = msg.str();
    return result;
  }

  // The anchor must ride a single shuttle.
  const std::size_t anchor_len = r.chains[0].size();
  long long anchor_output = r.multiset[0] + rung_of[0];
  for (std::size_t e = 0; e < anchor_len; ++e) {
    if (r.multiset[e] + rung_of[e] != anchor_output) {
      result.message = "anchor chain is torn across shuttles";
      return result;
    }
  }

  // Anchor holes (ascending rung intervals) for membership checks.
  std::vector<bool> anchor_rung(static_cast<std::size_t>(r.size) + 1, false);
  for (std::size_t e = 0; e < anchor_len; ++e) {
    anchor_rung[static_cast<std::size_t>(rung_of[e])] = true;
  }

  struct GroupInfo {
    long long start = 0;
    long long length = 0;
    long long weight = 0;
  };
  std::vector<GroupInfo> infos;
  for (const auto& [output, members] : groups) {
    if (output == anchor_output) continue;
    GroupInfo info;
    info.length = static_cast<long long>(members.size());
    long long min_rung = std::numeric_limits<long long>::max();
    for (std::size_t e : members) min_rung = std::min(min_rung, rung_of[e]);
    info.start = min_rung;
    // Canonical chain shape: values L-1..0 on consecutive ascending rungs.
    std::vector<bool> value_seen(static_cast<std::size_t>(info.length), false);
    for (std::size_t e : members) {
      const long long v = r.multiset[e];
      if (v < 0 || v >= info.length ||
          value_seen[static_cast<std::size_t>(v)] ||
          rung_of[e] != info.start + (info.length - 1 - v)) {
        result.message = "a shuttle group is not a canonical chain";
        return result;
      }
      value_seen[static_cast<std::size_t>(v)] = true;
      if (r.spread > 0 && anchor_rung[static_cast<std::size_t>(rung_of[e])]) {
        result.message = "a chain overlaps the anchor's rungs";
        return result;
      }
    }
    info.weight = info.length - r.spread;
    if (info.weight < 1) {
      result.message = "a chain is shorter than the spread allows";
      return result;
    }
    infos.push_back(info);
  }
  std::sort(infos.begin(), infos.end(),
            [](const GroupInfo& a, const GroupInfo& b) {
              return a.start < b.start;
            });

  // Walk chains in rung order, closing a triple exactly when the weights
  // reach the target.
  std::map<long long, std::vector<int>> unused_indices;
  for (std::size_t i = 0; i < r.instance.weights.size(); ++i) {
    unused_indices[r.instance.weights[i]].push_back(static_cast<int>(i) + 1);
  }
  std::vector<int> current;
  long long current_sum = 0;
  for (const GroupInfo& info : infos) {
    auto it = unused_indices.find(info.weight);
    if (it == unused_indices.end() || it->second.empty()) {
      std::ostringstream msg;
      msg << "no unused weight equals " << info.weight;
      result.message = msg.str();
      return result;
    }
    current.push_back(it->second.front());
    it->second.erase(it->second.begin());
    current_sum += info.weight;
    if (current_sum > t) {
      result.message = "chain weights overshoot the target within a hole";
      return result;
    }
    if (current_sum == t) {
      if (current.size() != 3) {
        result.message = "a hole closed without exactly three chains";
        return result;
      }
      std::sort(current.begin(), current.end());
      result.triples.push_back(Triple{current[0], current[1], current[2]});
      current.clear();
      current_sum = 0;
    }
  }
  if (!current.empty()) {
    result.message = "leftover chains do not complete a triple";
    return result;
  }
  if (static_cast<long long>(result.triples.size()) != m) {
    result.message = "recovered the wrong number of triples";
    return result;
  }
  result.ok = true;
  result.message = "ok";
  return result;
}

}  // namespace shuttlec::hardness
