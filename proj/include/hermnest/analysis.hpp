#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hermnest/semigroup.hpp"

namespace hermnest {

// Closed-form bounds and inclusion thresholds for the improved codes, each
// paired with a definitional oracle the verification suites replay.

enum class DimRule { SmallDelta, Prop3APositive, Prop3ANonpositive, Prop2Generic, Prop2HighDelta };
const char* dim_rule_name(DimRule r);

struct DimBoundResult {
  uint32_t delta_requested;
  uint32_t delta;           // rounded up to the next achievable designed distance
  int64_t bound;            // closed-form lower bound on dim E~(delta)
  uint32_t exact;           // sigma-count
  DimRule rule;
  std::optional<std::pair<int32_t, int32_t>> decomposition;  // (a, b) when a case uses one
};

// number of lattice points (x,y) in the top box with (q^2-x)(q-y) >= delta
int64_t integer_point_bound(uint32_t q, uint32_t delta);  // throws DeltaOutOfRange

uint32_t dim_improved_exact(uint32_t q, uint32_t delta);
DimBoundResult dim_bound(uint32_t q, uint32_t delta);

enum class InclusionRule { Prop4, Prop5, Prop6, Prop7, Prop8 };
const char* inclusion_rule_name(InclusionRule r);

struct InclusionResult {
  uint32_t delta1;
  uint32_t delta2_max;
  InclusionRule rule;
  std::string case_label;
  std::optional<std::pair<int32_t, int32_t>> decomposition;
};

// largest delta2 with the C~(delta2)-perp span inside E~(delta1)
InclusionResult delta2_max(uint32_t q, uint32_t delta1);  // throws NotAchievableDelta
// definitional referee: min mu over {sigma < delta1}, q^3+1 when that set is empty
uint32_t delta2_max_oracle(uint32_t q, uint32_t delta1);

enum class CodimRule { Prop10, Prop11, Prop12, Prop13 };
const char* codim_rule_name(CodimRule r);

struct CodimBoundResult {
  uint32_t delta1, delta2;
  int64_t bound;       // lower bound on the codimension; Prop 12 third case is exact
  bool vacuous;        // bound <= 0 reported, never clamped
  bool exact_case;
  CodimRule rule;
  int subcase;         // 0-based case index within the proposition
};

CodimBoundResult codim_bound(uint32_t q, uint32_t delta1, uint32_t delta2);

}  // namespace hermnest
