#pragma once

// Named check suites over catalog examples, shared by the CLI, the acceptance
// runner and the Python module.

#include <string>
#include <vector>

#include "wbafrac/catalog.hpp"

namespace wbafrac {

inline constexpr const char* kVersion = "0.1.0";

/// Every suite name accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Cutoff used for checking: the example's cutoff, or a bound covering every
/// basis vector for finite-dimensional hosts.
unsigned check_cutoff(const Example& ex);

/// Runs one suite. Suites that do not apply to the example (no r-form, no
/// antipode, ...) return a passing report carrying a note. Throws
/// InvalidArgument for unknown suite names.
Report run_suite(const Example& ex, const std::string& suite, std::uint64_t seed = 1);

/// The localization of ex at one of its named monoids.
Localization localize_example(const Example& ex, const std::string& monoid = "default", unsigned power_bound = 0);
/// The localization at a monoid generated by named elements.
Localization localize_example(const Example& ex, const std::vector<std::string>& names,
                              const AnnihilatorStrategy& strategy, unsigned power_bound = 0);

/// Header shared by all JSON outputs: tool version, example, parameters, cutoff.
nlohmann::json report_header(const Example& ex);

/// Graded dimensions: {"d": dim} for graded hosts, {"total": dim} otherwise.
nlohmann::json dimension_json(const Wba& h, unsigned cutoff);

}  // namespace wbafrac
