#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hermnest/codes.hpp"

namespace hermnest {

// One line of a verification report.
struct CheckLine {
  enum Status { Pass, Fail, Skip };
  std::string name;
  Status status;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> lines;
  bool all_passed() const {
    for (const auto& l : lines)
      if (l.status == CheckLine::Fail) return false;
    return true;
  }
  bool any_skipped() const {
    for (const auto& l : lines)
      if (l.status == CheckLine::Skip) return true;
    return false;
  }
};

SuiteReport verify_semigroup(uint32_t q);
SuiteReport verify_lemmas(uint32_t q);
SuiteReport verify_duality(uint32_t q);    // code-level rank identities; skips for q > 4
SuiteReport verify_inclusion(uint32_t q);  // threshold formulas vs oracle + symmetry
SuiteReport verify_dims(uint32_t q);
SuiteReport verify_distances(uint32_t q, uint64_t budget);  // exhaustive where affordable
SuiteReport verify_sharing(uint32_t q, uint64_t budget);

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, uint32_t q, uint64_t budget);

}  // namespace hermnest
