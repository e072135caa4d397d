#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace infoq {

inline constexpr int kExhaustiveLimit = 26;

/// CNF formula over variables 1..variables. A literal +v means x_v, -v
/// means not x_v.
struct SatInstance {
  int variables = 0;
  std::vector<std::vector<int>> clauses;

  /// Throws DomainError on empty clauses or literals outside [1, variables].
  void validate() const;
};

/// DIMACS CNF: "c" comment lines, one "p cnf <vars> <clauses>" header,
/// clauses as 0-terminated literal lists (may span lines).
SatInstance read_dimacs(std::istream& in);

/// Number of satisfying assignments by exhaustive enumeration, 64
/// assignments per machine word. Throws DomainError above kExhaustiveLimit.
std::uint64_t count_satisfying(const SatInstance& s);

/// Whether one assignment (bit v-1 holds x_v) satisfies the formula.
bool satisfies(const SatInstance& s, std::uint64_t assignment);

}  // namespace infoq
