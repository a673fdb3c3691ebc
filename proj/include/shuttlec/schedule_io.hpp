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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "shuttlec/schedule.hpp"
#include "shuttlec/sssc.hpp"

namespace shuttlec {

/// Pass-agnostic dump of a compiled round. For the blanks pass the rung
/// assignment spans s + blanks sites, otherwise it is a permutation of 1..s.
struct ScheduleDump {
  std::string pass;
  int shuttles = 0;
  long long blanks = 0;
  std::vector<int> reindexing;  // ancilla label -> rung
  std::vector<ScheduleGroup> groups;
};

ScheduleDump dump_schedule(const std::string& pass,
                           const ShuttleSchedule& schedule);
ScheduleDump dump_blanks(const BlanksSchedule& schedule);

nlohmann::json schedule_to_json(const ScheduleDump& dump);
void write_schedule_text(std::ostream& out, const ScheduleDump& dump);

}  // namespace shuttlec
