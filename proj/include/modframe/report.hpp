/*
 * Copyright 2026 the modframe authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace modframe::report {

enum class Status { pass, fail, info };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "info";
  }
}

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string witness;
};

// Collects named checks for one command run.  Reports must be byte
// reproducible, so nothing time or host dependent goes in here.
struct Report {
  std::string command;
  std::vector<CheckResult> checks;

  void add(std::string name, bool ok, double max_error, double tolerance,
           std::string witness = "") {
    checks.push_back({std::move(name), ok ? Status::pass : Status::fail,
                      max_error, tolerance, std::move(witness)});
  }

  void add_info(std::string name, double value, std::string witness = "") {
    checks.push_back(
        {std::move(name), Status::info, value, 0.0, std::move(witness)});
  }

  bool ok() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return false;
    return true;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["ok"] = ok();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json e;
      e["name"] = c.name;
      e["status"] = status_name(c.status);
      e["max_error"] = c.max_error;
      if (c.status != Status::info) e["tolerance"] = c.tolerance;
      if (!c.witness.empty()) e["witness"] = c.witness;
      j["checks"].push_back(std::move(e));
    }
    return j;
  }

  void print(std::ostream& os) const {
    for (const auto& c : checks) {
      const char* tag = c.status == Status::pass   ? "PASS"
                        : c.status == Status::fail ? "FAIL"
                                                   : "INFO";
      os << "[" << tag << "] " << c.name << "  max_error=" << c.max_error;
      if (c.status != Status::info) os << "  tolerance=" << c.tolerance;
      if (!c.witness.empty()) os << "  (" << c.witness << ")";
      os << "\n";
    }
    os << (ok() ? "OK" : "FAILED") << ": " << command << "\n";
  }
};

// 0 all checks hold, 1 a check failed, 2 the input could not be used.
inline int exit_code(const Report& r) { return r.ok() ? 0 : 1; }
inline constexpr int kExitBadInput = 2;

}  // namespace modframe::report
