#pragma once

// Internal dense linear algebra over the prime field F_p. Sizes here are
// tiny (rows = ring order times coordinate dimension), so a plain
// elimination is the right tool. Not installed.

#include <cstdint>
#include <optional>
#include <vector>

namespace ringforge::detail {

// Solves A x = b over F_p (A row-major, rows x cols). Returns a solution
// with free variables fixed to zero, or nullopt when inconsistent.
std::optional<std::vector<unsigned>> fp_solve(
    unsigned p, std::vector<std::vector<unsigned>> a, std::vector<unsigned> b);

}  // namespace ringforge::detail
