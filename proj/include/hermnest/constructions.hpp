#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermnest/analysis.hpp"
#include "hermnest/codes.hpp"

namespace hermnest {

// Asymmetric quantum code parameters [[n, ell, d_z/d_x]] over GF(q^2).
struct AQCParams {
  uint32_t n = 0;
  uint32_t ell = 0;
  uint32_t d_z = 0;
  uint32_t d_x = 0;
  uint32_t alphabet = 0;  // q^2
  bool impure = false;    // d_z > d(C1) or d_x > d(C2-perp), when those are known
  Provenance n_prov = Provenance::Formula;
  Provenance dz_prov = Provenance::Formula;
  Provenance dx_prov = Provenance::Formula;
  std::string construction;

  friend bool operator==(const AQCParams& a, const AQCParams& b) {
    return a.n == b.n && a.ell == b.ell && a.d_z == b.d_z && a.d_x == b.d_x;
  }
};

// Ramp secret sharing parameters: n shares, ell-symbol secret, privacy t,
// reconstruction r.
struct RampParams {
  uint32_t n = 0;
  uint32_t ell = 0;
  uint32_t t = 0;
  uint32_t r = 0;
  Provenance t_prov = Provenance::Formula;
  Provenance r_prov = Provenance::Formula;
  std::string construction;
};

// --- the two nested-pair families ---

// C1 = E~(delta1), C2 = the C~(delta2)-perp span; throws InclusionViolated
// when delta2 exceeds delta2_max, NotAchievableDelta on unachievable inputs,
// ZeroCodimension when the pair collapses.
NestedPair improved_pair(const CurveContext& ctx, uint32_t delta1, uint32_t delta2);

// One-point pairs of small codimension, lower and upper corner variants;
// 0 <= i <= j < q (BadIndices otherwise).
NestedPair small_codim_pair_lower(const CurveContext& ctx, uint32_t i, uint32_t j);
NestedPair small_codim_pair_upper(const CurveContext& ctx, uint32_t i, uint32_t j);

// exact minimum distance of the dual of C_L(D, lambda Q): min mu over pole
// orders above lambda (the order bound is an equality on this curve)
uint32_t dual_onepoint_distance(uint32_t q, int64_t lambda);
// exact minimum distance of C_L(D, lambda Q): min sigma over pole orders <= lambda
uint32_t onepoint_distance(uint32_t q, int64_t lambda);

// --- derived application parameters ---

AQCParams css_params(const NestedPair& pair);
RampParams ramp_params(const NestedPair& pair);
AQCParams pad_to_length(AQCParams params, uint32_t n_target);  // ShrinkNotAllowed

// --- comparison constructions (parameter arithmetic only) ---

// generalized Reed-Solomon asymmetric codes over GF(q^2)
AQCParams la_guardia_params(uint32_t q, uint32_t m1, uint32_t m2, uint32_t k, uint32_t c);

// Cartesian-product constructions
AQCParams cartesian_params_thm24(uint32_t q, uint32_t s, uint32_t m, uint32_t delta1,
                                 uint32_t delta2);
AQCParams cartesian_params_cor29(uint32_t q, uint32_t s, uint32_t m, uint32_t ell,
                                 bool interchange = false);

// lower bound on the threshold gap r - t for schemes over GF(q^2), maximized
// over the statement's m range in exact rational arithmetic
uint32_t threshold_gap_bound(uint32_t q, uint32_t n, uint32_t ell);

// --- exhaustive search over both families ---

enum class Objective { MaximizeDz, MaximizeEll };

struct PairConstraints {
  uint32_t min_ell = 1;
  uint32_t min_dz = 1;
  uint32_t min_dx = 1;
};

// Parameter-level description of a candidate pair (no matrices built).
struct PairSummary {
  uint32_t d_z, d_x, ell;
  std::string family;  // improved | lower | upper
  uint32_t p1, p2;     // (delta1, delta2) or (i, j)
  uint32_t lambda1;    // tie-break key: largest pole order in C1
};

// every candidate from both families (delta1, delta2 >= 2; C2 != {0})
std::vector<PairSummary> enumerate_pairs(uint32_t q);

// throws NoFeasiblePair
PairSummary best_pair_search(uint32_t q, Objective objective, const PairConstraints& cs);
// materialize the matrices for a summary
NestedPair realize_pair(const CurveContext& ctx, const PairSummary& s);

// One row of the privacy/reconstruction trade-off data: for secret length ell,
// the minimal reconstruction number with privacy >= t_req. A pair of larger
// codimension carries shorter secrets with no parameter loss, so the minima
// run over codimension >= ell. The baseline column plays the same game with
// one-point pairs whose distances come from the Goppa bound alone.
struct SssCurveRow {
  uint32_t ell;
  std::optional<uint32_t> r_construction;
  std::optional<uint32_t> t_construction;  // guaranteed privacy of the chosen pair
  std::string construction;
  std::optional<uint32_t> r_goppa;
  uint32_t gap_bound;  // threshold-gap lower bound for this ell
};
std::vector<SssCurveRow> sss_curve(uint32_t q, uint32_t t_req);

}  // namespace hermnest
