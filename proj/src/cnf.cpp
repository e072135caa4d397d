#include "infoq/cnf.hpp"

#include <bit>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>

#include "infoq/error.hpp"

namespace infoq {

namespace {

// Bit j of kLowPatterns[b] is bit b of j.
constexpr std::uint64_t kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

void SatInstance::validate() const {
  if (variables < 0) {
    throw DomainError("negative variable count");
  }
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    if (clauses[c].empty()) {
      throw DomainError("clause " + std::to_string(c + 1) + " is empty");
    }
    for (int lit : clauses[c]) {
      if (lit == 0 || std::abs(lit) > variables) {
        throw DomainError("literal " + std::to_string(lit) + " outside variables 1.." + std::to_string(variables));
      }
    }
  }
}

SatInstance read_dimacs(std::istream& in) {
  SatInstance s;
  bool have_header = false;
  std::size_t declared = 0;
  std::vector<int> current;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') {
      continue;
    }
    if (first == "p") {
      std::string fmt;
      long long vars = -1, count = -1;
      if (have_header || !(ls >> fmt >> vars >> count) || fmt != "cnf" || vars < 0 || count < 0) {
        throw DomainError("malformed DIMACS header: " + line);
      }
      have_header = true;
      s.variables = static_cast<int>(vars);
      declared = static_cast<std::size_t>(count);
      continue;
    }
    if (!have_header) {
      throw DomainError("DIMACS clause before the 'p cnf' header");
    }
    std::istringstream all(line);
    std::string tok;
    while (all >> tok) {
      char* end = nullptr;
      const long v = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') {
        throw DomainError("bad DIMACS literal '" + tok + "'");
      }
      if (v == 0) {
        s.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(static_cast<int>(v));
      }
    }
  }
  if (!have_header) {
    throw DomainError("missing 'p cnf' header");
  }
  if (!current.empty()) {
    s.clauses.push_back(std::move(current));
  }
  if (s.clauses.size() != declared) {
    throw DomainError("header declares " + std::to_string(declared) + " clauses, found " +
                      std::to_string(s.clauses.size()));
  }
  s.validate();
  return s;
}

std::uint64_t count_satisfying(const SatInstance& s) {
  s.validate();
  if (s.variables > kExhaustiveLimit) {
    throw DomainError("exhaustive enumeration refused: " + std::to_string(s.variables) + " variables exceeds " +
                      std::to_string(kExhaustiveLimit));
  }
  const int n = s.variables;
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t words = (total + 63) / 64;
  const std::uint64_t tail_mask = total >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;

  std::vector<std::uint64_t> positive(static_cast<std::size_t>(n) + 1);
  std::uint64_t count = 0;
  for (std::uint64_t w = 0; w < words; ++w) {
    const std::uint64_t base = w << 6U;
    for (int v = 1; v <= n; ++v) {
      const int b = v - 1;
      positive[v] = b < 6 ? kLowPatterns[b] : (((base >> b) & 1U) ? ~std::uint64_t{0} : 0);
    }
    std::uint64_t sat = tail_mask;
    for (const auto& clause : s.clauses) {
      std::uint64_t any = 0;
      for (int lit : clause) {
        any |= lit > 0 ? positive[lit] : ~positive[-lit];
      }
      sat &= any;
      if (sat == 0) {
        break;
      }
    }
    count += static_cast<std::uint64_t>(std::popcount(sat));
  }
  return count;
}

bool satisfies(const SatInstance& s, std::uint64_t assignment) {
  for (const auto& clause : s.clauses) {
    bool any = false;
    for (int lit : clause) {
      const bool value = (assignment >> (std::abs(lit) - 1)) & 1U;
      if ((lit > 0) == value) {
        any = true;
        break;
      }
    }
    if (!any) {
      return false;
    }
  }
  return true;
}

}  // namespace infoq
