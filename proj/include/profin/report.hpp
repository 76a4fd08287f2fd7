#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace profin {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Machine-readable result of a CLI subcommand or verification suite.
/// Exit-code convention: 0 iff every check passes.
struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<Check> checks;

  void add_check(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    auto arr = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      cj["detail"] = c.detail;
      arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    return j;
  }
};

}  // namespace profin
