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

#include "shuttlec/schedule_io.hpp"

#include <ostream>

namespace shuttlec {

ScheduleDump dump_schedule(const std::string& pass,
                           const ShuttleSchedule& schedule) {
  ScheduleDump dump;
  dump.pass = pass;
  dump.shuttles = schedule.shuttles();
  dump.blanks = 0;
  dump.reindexing = schedule.reindexing.slot_of;
  dump.groups = schedule.groups;
  return dump;
}

ScheduleDump dump_blanks(const BlanksSchedule& schedule) {
  ScheduleDump dump;
  dump.pass = "blanks";
  dump.shuttles = schedule.result.shuttles;
  dump.blanks = schedule.result.blanks;
  dump.reindexing = schedule.rung_of;
  dump.groups = schedule.groups;
  return dump;
}

nlohmann::json schedule_to_json(const ScheduleDump& dump) {
  nlohmann::json root;
  root["pass"] = dump.pass;
  root["shuttles"] = dump.shuttles;
  root["blanks"] = dump.blanks;
  root["reindexing"] = dump.reindexing;
  root["groups"] = nlohmann::json::array();
  for (const ScheduleGroup& group : dump.groups) {
    nlohmann::json g;
    g["delta"] = group.delta;
    g["gates"] = nlohmann::json::array();
    for (const Gate& gate : group.gates) {
      g["gates"].push_back({{"data", gate.data},
                            {"ancilla", gate.ancilla},
                            {"basis", std::string(1, basis_letter(gate.basis))},
                            {"check", gate.check}});
    }
    root["groups"].push_back(std::move(g));
  }
  return root;
}

void write_schedule_text(std::ostream& out, const ScheduleDump& dump) {
  out << "pass: " << dump.pass << '\n';
  out << "shuttles: " << dump.shuttles << '\n';
  out << "blanks: " << dump.blanks << '\n';
  out << "rungs:";
  for (int rung : dump.reindexing) out << ' ' << rung;
  out << '\n';
  for (const ScheduleGroup& group : dump.groups) {
    out << "delta " << group.delta << ":";
    for (const Gate& gate : group.gates) {
      out << " (" << gate.data << "," << gate.ancilla << ","
          << basis_letter(gate.basis) << "," << gate.check << ")";
    }
    out << '\n';
  }
}

}  // namespace shuttlec
