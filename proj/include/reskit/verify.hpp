#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reskit/skew.hpp"

namespace reskit {

struct FixtureResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;  // what differed, on failure
};

struct FixtureReport {
  std::vector<FixtureResult> items;
  bool all_pass() const;
};

// The pinned reproduction fixtures behind the `verify-paper` subcommand, in
// run order: id and one-line statement of what each item checks.
std::vector<std::pair<std::string, std::string>> fixture_catalog();

// Runs the whole suite; items are independent (a failure or error in one is
// recorded and the rest still run).  The overload taking a matrix swaps it
// in for the built-in quintic fixture so tests can corrupt an entry and
// watch exactly the dependent items fail.
FixtureReport run_fixture_suite();
FixtureReport run_fixture_suite(const SkewLinearMatrix& quintic);

}  // namespace reskit
