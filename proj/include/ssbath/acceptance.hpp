#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssbath::acceptance {

struct CriterionResult {
  int id;
  bool pass;
  std::string summary;
  double seconds;
};

constexpr int kCriteria = 10;

CriterionResult run(int id);

/// Runs every criterion, printing one line each to `out` as it finishes.
std::vector<CriterionResult> run_all(std::ostream& out);

std::string format(const CriterionResult& r);

}  // namespace ssbath::acceptance
