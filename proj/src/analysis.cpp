#include "hermnest/analysis.hpp"

#include <limits>

#include "hermnest/intervals.hpp"

namespace hermnest {

const char* dim_rule_name(DimRule r) {
  switch (r) {
    case DimRule::SmallDelta: return "SmallDelta";
    case DimRule::Prop3APositive: return "Prop3-a-positive";
    case DimRule::Prop3ANonpositive: return "Prop3-a-nonpositive";
    case DimRule::Prop2Generic: return "Prop2-generic";
    case DimRule::Prop2HighDelta: return "Prop2-highdelta";
  }
  return "?";
}

const char* inclusion_rule_name(InclusionRule r) {
  switch (r) {
    case InclusionRule::Prop4: return "Prop4";
    case InclusionRule::Prop5: return "Prop5";
    case InclusionRule::Prop6: return "Prop6";
    case InclusionRule::Prop7: return "Prop7";
    case InclusionRule::Prop8: return "Prop8";
  }
  return "?";
}

const char* codim_rule_name(CodimRule r) {
  switch (r) {
    case CodimRule::Prop10: return "Prop10";
    case CodimRule::Prop11: return "Prop11";
    case CodimRule::Prop12: return "Prop12";
    case CodimRule::Prop13: return "Prop13";
  }
  return "?";
}

int64_t integer_point_bound(uint32_t q, uint32_t delta) {
  int64_t q2 = int64_t(q) * q;
  if (delta == 0 || int64_t(delta) > q2)
    fail(Err::DeltaOutOfRange, "delta = " + std::to_string(delta));
  if (delta < q) return q2 - floor_x_xln(delta, delta, 1);
  return q2 - floor_x_xln(delta, q2, delta);
}

uint32_t dim_improved_exact(uint32_t q, uint32_t delta) {
  return Semigroup::get(q).count_sigma_at_least(delta);
}

namespace {

// x = a*q + b*(q+1) with -q < a < q and 0 <= b < q (division-algorithm split)
std::pair<int32_t, int32_t> split_ab(uint32_t q, int64_t x) {
  int32_t b = int32_t(x % q);
  int32_t a = int32_t((x - int64_t(b) * (q + 1)) / q);
  if (!(-int32_t(q) < a && a < int32_t(q)))
    fail(Err::DeltaOutOfRange, "no (a,b) decomposition for " + std::to_string(x));
  return {a, b};
}

int64_t triangle(int32_t a, int32_t b) {  // sum_{s=0}^{a+b} (s+1)
  int64_t m = a + b;
  return (m + 1) * (m + 2) / 2;
}

}  // namespace

DimBoundResult dim_bound(uint32_t q, uint32_t delta_req) {
  const Semigroup& sg = Semigroup::get(q);
  if (delta_req == 0 || delta_req > sg.n())
    fail(Err::DeltaOutOfRange, "delta = " + std::to_string(delta_req));
  uint32_t delta = *sg.round_up_achievable(delta_req);  // n is always achievable
  const int64_t n = sg.n(), g = sg.genus();

  DimBoundResult r;
  r.delta_requested = delta_req;
  r.delta = delta;
  r.exact = sg.count_sigma_at_least(delta);
  if (delta <= q) {
    r.rule = DimRule::SmallDelta;
    r.bound = n - floor_x_xln(delta, delta, 1);
  } else if (delta <= uint32_t(q) * q - q) {
    auto [a, b] = split_ab(q, int64_t(q) * q - delta);  // n-delta = n-q^2+aq+b(q+1)
    r.decomposition = {{a, b}};
    r.rule = a > 0 ? DimRule::Prop3APositive : DimRule::Prop3ANonpositive;
    int64_t q2 = int64_t(q) * q;
    r.bound = n - delta - g + 1 - triangle(a, b) + (q2 - floor_x_xln(delta, q2, delta));
    if (a > 0) r.bound += a;
  } else if (delta < n - 2 * g + 2) {
    r.rule = DimRule::Prop2Generic;
    r.bound = n - g + 1 - delta;
  } else {
    auto [a, b] = split_ab(q, n - delta);
    r.decomposition = {{a, b}};
    r.rule = DimRule::Prop2HighDelta;
    r.bound = triangle(a, b) - std::max<int64_t>(a, 0);
  }
  return r;
}

uint32_t delta2_max_oracle(uint32_t q, uint32_t delta1) {
  const Semigroup& sg = Semigroup::get(q);
  uint32_t best = sg.n() + 1;  // sentinel: every delta2 works
  bool any = false;
  for (const auto& e : sg.elements())
    if (e.sigma < delta1) {
      any = true;
      best = std::min(best, e.mu);
    }
  return any ? best : sg.n() + 1;
}

InclusionResult delta2_max(uint32_t q, uint32_t delta1) {
  const Semigroup& sg = Semigroup::get(q);
  if (delta1 < 2 || !sg.is_achievable(delta1))
    fail(Err::NotAchievableDelta,
         "delta1 = " + std::to_string(delta1) + " not an achievable designed distance >= 2");
  const int64_t n = sg.n();
  const int64_t q2 = int64_t(q) * q;
  InclusionResult r;
  r.delta1 = delta1;
  if (delta1 <= q) {
    r.rule = InclusionRule::Prop4;
    r.case_label = "";
    r.delta2_max = uint32_t(n - int64_t(delta1 - 2) * (q + 1));
    return r;
  }
  if (delta1 <= q2 - q) {
    r.rule = InclusionRule::Prop5;
    int64_t x = int64_t(delta1) - (q + 1);
    int32_t a = int32_t(x / q), b = int32_t(x % q);
    r.decomposition = {{a, b}};
    if (b <= a) {
      r.case_label = "b<=a";
      r.delta2_max = uint32_t(n - q2 + q - delta1 + 2);
    } else {
      r.case_label = "b>a";
      r.delta2_max = uint32_t(n - q2 - int64_t(a) * (q + 1));
    }
    return r;
  }
  if (delta1 <= n - 2 * q2 + 2 * q) {
    r.rule = InclusionRule::Prop6;
    r.delta2_max = uint32_t(n - q2 + q + 2 - delta1);
    return r;
  }
  if (delta1 <= n - q2) {
    // The shared endpoint delta1 = q^3 - q^2 is dispatched here: the
    // definitional oracle agrees with this case, not with the next one.
    r.rule = InclusionRule::Prop7;
    int64_t x = n - q2 - delta1;
    int32_t a = int32_t(x / q), b = int32_t(x % q);
    r.decomposition = {{a, b}};
    if (b < a) {
      r.case_label = "b<a";
      r.delta2_max = uint32_t(int64_t(a + 1) * q + b + 2);
    } else if (b == int32_t(q) - 1) {
      r.case_label = "b=q-1";
      r.delta2_max = uint32_t(int64_t(a + 2) * q + 1);
    } else {
      r.case_label = "a<=b<q-1";
      r.delta2_max = uint32_t(int64_t(a + 2) * q);
    }
    return r;
  }
  r.rule = InclusionRule::Prop8;
  int64_t x = n - delta1;
  int32_t a = int32_t(x / q), b = int32_t(x % q);
  r.decomposition = {{a, b}};
  r.case_label = b < a ? "b<a" : "b>=a";
  r.delta2_max = uint32_t(b < a ? a + 1 : a + 2);
  return r;
}

CodimBoundResult codim_bound(uint32_t q, uint32_t delta1, uint32_t delta2) {
  const Semigroup& sg = Semigroup::get(q);
  if (!sg.is_achievable(delta1) || !sg.is_achievable(delta2))
    fail(Err::NotAchievableDelta, std::to_string(delta1) + "," + std::to_string(delta2));
  if (delta1 < 2 || delta2 > delta2_max(q, delta1).delta2_max)
    fail(Err::InclusionViolated, "delta2 = " + std::to_string(delta2) + " > delta2_max");
  const int64_t n = sg.n(), g = sg.genus(), q2 = int64_t(q) * q;

  CodimBoundResult r;
  r.delta1 = delta1;
  r.delta2 = delta2;
  r.exact_case = false;
  if (delta1 <= q) {
    r.rule = CodimRule::Prop10;
    int64_t f1 = floor_x_xln(delta1, delta1, 1);
    if (delta2 <= q) {
      r.subcase = 0;
      r.bound = n - f1 - floor_x_xln(delta2, delta2, 1);
    } else if (delta2 <= q2 - q) {
      r.subcase = 1;
      auto [a, b] = split_ab(q, q2 - delta2);
      r.bound = n + q2 - g + 1 - f1 - delta2 - triangle(a, b) -
                floor_x_xln(delta2, q2, delta2) + std::max<int64_t>(a, 0);
    } else if (delta2 < n - 2 * g + 2) {
      r.subcase = 2;
      r.bound = n - g + 1 - f1 - delta2;
    } else {
      r.subcase = 3;
      auto [a, b] = split_ab(q, n - delta2);
      r.bound = triangle(a, b) - f1 - std::max<int64_t>(a, 0);
    }
  } else if (delta1 <= q2 - q) {
    r.rule = CodimRule::Prop11;
    auto [a1, b1] = split_ab(q, q2 - delta1);
    int64_t f1 = floor_x_xln(delta1, q2, delta1);
    if (delta2 <= q) {
      r.subcase = 0;
      r.bound = n + q2 - g + 1 - delta1 - triangle(a1, b1) + std::max<int64_t>(a1, 0) - f1 -
                floor_x_xln(delta2, delta2, 1);
    } else if (delta2 <= q2 - q) {
      r.subcase = 1;
      auto [a2, b2] = split_ab(q, q2 - delta2);
      r.bound = n + 2 * q2 - 2 * g + 2 - int64_t(delta1) - delta2 - triangle(a1, b1) +
                std::max<int64_t>(a1, 0) - triangle(a2, b2) + std::max<int64_t>(a2, 0) - f1 -
                floor_x_xln(delta2, q2, delta2);
    } else {
      r.subcase = 2;
      r.bound = n + q2 - 2 * g + 2 - int64_t(delta1) - delta2 - triangle(a1, b1) - f1 +
                std::max<int64_t>(a1, 0);
    }
  } else if (delta1 < n - 2 * g + 2) {
    r.rule = CodimRule::Prop12;
    if (delta2 <= q) {
      r.subcase = 0;
      r.bound = n - g + 1 - delta1 - floor_x_xln(delta2, delta2, 1);
    } else if (delta2 <= q2 - q) {
      r.subcase = 1;
      auto [a, b] = split_ab(q, q2 - delta2);
      r.bound = n + q2 - 2 * g + 2 - int64_t(delta1) - delta2 - triangle(a, b) -
                floor_x_xln(delta2, q2, delta2) + std::max<int64_t>(a, 0);
    } else {
      r.subcase = 2;
      r.exact_case = true;
      r.bound = n - int64_t(delta1) - delta2 - 2 * g + 2;
    }
  } else {
    r.rule = CodimRule::Prop13;
    r.subcase = 0;
    auto [a, b] = split_ab(q, n - delta1);
    r.bound = triangle(a, b) - std::max<int64_t>(a, 0) - floor_x_xln(delta2, delta2, 1);
  }
  r.vacuous = r.bound <= 0;
  return r;
}

}  // namespace hermnest
