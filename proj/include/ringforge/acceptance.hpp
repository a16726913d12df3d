#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ringforge {

// One verification criterion of the built-in suite. The suite is replayed
// both by the standalone acceptance binary and by the CLI `verify` command.
struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double elapsed_ms;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240809;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

// Prints one PASS/FAIL line per criterion; returns the failure count.
int print_acceptance(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace ringforge
