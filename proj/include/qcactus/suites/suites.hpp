#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qcactus::suites {

inline constexpr const char* kVersion = "1.0.0";

enum class Status { Pass, Fail, Skipped };

std::string status_name(Status s);

struct Check {
  std::string name;
  std::string anchor;
  Status status = Status::Pass;
  nlohmann::json witness;  // null unless failed
  nlohmann::json details;  // optional per-check data, e.g. module dimension
  double wall_time = 0.0;  // seconds
};

/// A check body returns nullopt on success, otherwise a counterexample.
using Body = std::function<std::optional<nlohmann::json>()>;

/// Times the body; an escaping exception counts as a failure.
Check run_check(const std::string& name, const std::string& anchor, const Body& body);

/// "qarith", "coxeter", "crystal", "module", "gk".
const std::vector<std::string>& suite_names();

/// Runs one suite or "all"; throws std::invalid_argument for other names.
std::vector<Check> run_suite(const std::string& name, std::uint64_t seed);

/// One check per l1 + l2 <= max_degree, sorted by (l1 + l2, l1).
std::vector<Check> conjecture_sweep(int max_degree, int jobs);

/// The nine acceptance criteria in order.
std::vector<Check> acceptance_checks(int jobs);

bool all_passed(const std::vector<Check>& checks);

nlohmann::json to_json(const Check& c);
nlohmann::json make_report(const nlohmann::json& config, const std::vector<Check>& checks);

}  // namespace qcactus::suites
