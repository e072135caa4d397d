#pragma once

#include <string>
#include <vector>

namespace infoq {

/// One golden-value or property check: what was computed, what it was
/// compared against and the verdict.
struct VerifyCheck {
  std::string id;
  std::string description;
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct VerifyOptions {
  /// Check id (or id prefix ending before a '/') whose expected value is
  /// deliberately corrupted, to exercise the harness itself.
  std::string inject_fault;
};

/// Every check, in a fixed order. Deterministic: fixed seeds, no timings.
/// Throws DomainError when inject_fault names no check.
std::vector<VerifyCheck> run_verification(const VerifyOptions& options = {});

}  // namespace infoq
