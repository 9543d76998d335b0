#include "hermnest/constructions.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>

#include "hermnest/intervals.hpp"

namespace hermnest {

NestedPair improved_pair(const CurveContext& ctx, uint32_t delta1, uint32_t delta2) {
  const uint32_t q = ctx.q();
  const Semigroup& sg = Semigroup::get(q);
  if (!sg.is_achievable(delta1) || !sg.is_achievable(delta2))
    fail(Err::NotAchievableDelta,
         "(" + std::to_string(delta1) + "," + std::to_string(delta2) + ")");
  if (delta2 > delta2_max(q, delta1).delta2_max)
    fail(Err::InclusionViolated,
         "delta2 = " + std::to_string(delta2) + " > delta2_max(" + std::to_string(delta1) + ")");
  NestedPair p = make_pair(LinearCode::improved_primary(ctx, delta1),
                           LinearCode::improved_dual_perp(ctx, delta2));
  p.d_rel = DistanceValue{delta1, Provenance::Formula};
  p.d_rel_dual = DistanceValue{delta2, Provenance::Formula};
  p.construction = "improved(" + std::to_string(delta1) + "," + std::to_string(delta2) + ")";
  return p;
}

uint32_t onepoint_distance(uint32_t q, int64_t lambda) {
  const Semigroup& sg = Semigroup::get(q);
  uint32_t best = sg.n() + 1;
  for (const auto& e : sg.elements())
    if (int64_t(e.lambda) <= lambda) best = std::min(best, e.sigma);
  return best;
}

uint32_t dual_onepoint_distance(uint32_t q, int64_t lambda) {
  const Semigroup& sg = Semigroup::get(q);
  uint32_t best = sg.n() + 1;
  for (const auto& e : sg.elements())
    if (int64_t(e.lambda) > lambda) best = std::min(best, e.mu);
  return best;
}

NestedPair small_codim_pair_lower(const CurveContext& ctx, uint32_t i, uint32_t j) {
  const uint32_t q = ctx.q();
  if (!(i <= j && j < q)) fail(Err::BadIndices, "need 0 <= i <= j < q");
  int64_t lam1 = int64_t(i) * q + int64_t(j) * (q + 1);
  int64_t lam2 = int64_t(j) * q + int64_t(i) * (q + 1) - 1;
  NestedPair p = make_pair(LinearCode::one_point(ctx, lam1), LinearCode::one_point(ctx, lam2));
  p.d_rel = DistanceValue{uint32_t(ctx.n() - lam1), Provenance::Formula};
  p.d_rel_dual = DistanceValue{(i + 1) * (j + 1), Provenance::Formula};
  p.construction = "lower(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return p;
}

NestedPair small_codim_pair_upper(const CurveContext& ctx, uint32_t i, uint32_t j) {
  const uint32_t q = ctx.q();
  if (!(i <= j && j < q)) fail(Err::BadIndices, "need 0 <= i <= j < q");
  // The pair is the dual-mirror of the lower construction: the roles of i and
  // j swap between lambda1 and lambda2, otherwise the printed formulas would
  // make the two codes coincide whenever i < j.
  int64_t lam1 = int64_t(q * q - 1 - j) * q + int64_t(q - 1 - i) * (q + 1);
  int64_t lam2 = int64_t(q * q - 1 - i) * q + int64_t(q - 1 - j) * (q + 1) - 1;
  NestedPair p = make_pair(LinearCode::one_point(ctx, lam1), LinearCode::one_point(ctx, lam2));
  p.d_rel = DistanceValue{(i + 1) * (j + 1), Provenance::Formula};
  p.d_rel_dual =
      DistanceValue{uint32_t(ctx.n() - int64_t(i) * q - int64_t(j) * (q + 1)), Provenance::Formula};
  p.construction = "upper(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return p;
}

AQCParams css_params(const NestedPair& pair) {
  if (!pair.d_rel || !pair.d_rel_dual)
    fail(Err::BadArgument, "pair carries no relative-distance data");
  AQCParams a;
  a.n = pair.c1.n();
  a.ell = pair.ell;
  a.d_z = pair.d_rel->value;
  a.d_x = pair.d_rel_dual->value;
  a.alphabet = pair.c1.ctx().field().order();
  a.dz_prov = pair.d_rel->prov;
  a.dx_prov = pair.d_rel_dual->prov;
  a.construction = pair.construction;
  // non-relative distances are exact via the order bound on this curve
  const uint32_t q = pair.c1.ctx().q();
  if (pair.c1.pole_orders() && pair.c2.pole_orders()) {
    const Semigroup& sg = Semigroup::get(q);
    uint32_t d1 = sg.n() + 1, d2p = sg.n() + 1;
    for (uint32_t lam : *pair.c1.pole_orders()) d1 = std::min(d1, sg.at(lam).sigma);
    // d(C2-perp) = min mu over pole orders outside C2's set
    std::vector<bool> in2(sg.elements().back().lambda + 1, false);
    for (uint32_t lam : *pair.c2.pole_orders()) in2[lam] = true;
    for (const auto& e : sg.elements())
      if (!in2[e.lambda]) d2p = std::min(d2p, e.mu);
    a.impure = a.d_z > d1 || a.d_x > d2p;
  }
  return a;
}

RampParams ramp_params(const NestedPair& pair) {
  if (!pair.d_rel || !pair.d_rel_dual)
    fail(Err::BadArgument, "pair carries no relative-distance data");
  RampParams r;
  r.n = pair.c1.n();
  r.ell = pair.ell;
  r.t = pair.d_rel_dual->value - 1;
  r.r = pair.c1.n() - pair.d_rel->value + 1;
  r.t_prov = pair.d_rel_dual->prov;
  r.r_prov = pair.d_rel->prov;
  r.construction = pair.construction;
  return r;
}

AQCParams pad_to_length(AQCParams params, uint32_t n_target) {
  if (n_target < params.n) fail(Err::ShrinkNotAllowed, "target length below code length");
  if (n_target > params.n) {
    params.n = n_target;
    params.n_prov = Provenance::Padded;
  }
  return params;
}

AQCParams la_guardia_params(uint32_t q, uint32_t m1, uint32_t m2, uint32_t k, uint32_t c) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) fail(Err::ConstraintViolated, what);
  };
  require(m1 >= 1, "m1 >= 1");
  require(c >= 1, "c >= 1");
  require(1 < k, "1 < k");
  require(k < m2, "k < m2");
  require(m2 < 2 * k + c, "m2 < 2k + c");
  mpz_class cap;
  mpz_ui_pow_ui(cap.get_mpz_t(), q, 2 * m1);
  require(mpz_class(2 * k + c) <= cap, "2k + c <= q^(2 m1)");
  uint32_t d = m2 - k + 1;
  require(m2 > c + 1, "m2 > c + 1");
  require(d > c + 1, "d > c + 1");
  AQCParams a;
  a.n = m1 * m2;
  a.ell = m1 * (2 * k - m2 + c);
  a.d_z = d;
  a.d_x = d - c;
  a.alphabet = q * q;
  a.construction = "laGuardia(" + std::to_string(m1) + "," + std::to_string(m2) + "," +
                   std::to_string(k) + "," + std::to_string(c) + ")";
  return a;
}

AQCParams cartesian_params_thm24(uint32_t q, uint32_t s, uint32_t m, uint32_t delta1,
                                 uint32_t delta2) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) fail(Err::ConstraintViolated, what);
  };
  require(m >= 2, "m >= 2");
  require(s <= q, "s <= q");
  uint64_t n = 1;
  for (uint32_t t = 0; t < m; ++t) n *= s;
  require(1 <= delta1 && delta1 <= n, "1 <= delta1 <= s^m");
  // v with s^v <= delta1 <= s^(v+1), capped at m-1
  uint32_t v = 0;
  {
    uint64_t pw = s;
    while (v + 1 <= m - 1 && pw <= delta1) pw *= s, ++v;
  }
  // delta2 <= floor((s - delta1/s^v + 1) * s^(m-v+1)), exact rational
  mpz_class sv, smv1;
  mpz_ui_pow_ui(sv.get_mpz_t(), s, v);
  mpz_ui_pow_ui(smv1.get_mpz_t(), s, m - v + 1);
  mpq_class cap((mpz_class(s + 1) * sv - delta1) * smv1, sv);
  cap.canonicalize();
  mpz_class fl = cap.get_num() / cap.get_den();  // both sides positive
  require(delta2 >= 1 && mpz_class(delta2) <= fl, "delta2 within the floor bound");

  // ell >= s^m - sum_{t=1}^m (delta1 ln(s^m/delta1)^(t-1) + delta2 ln(s^m/delta2)^(t-1))/(t-1)!
  std::vector<LogTerm> terms;
  int64_t fact = 1;
  for (uint32_t t = 1; t <= m; ++t) {
    if (t >= 2) fact *= int64_t(t - 1);
    for (uint32_t dd : {delta1, delta2}) {
      LogTerm lt;
      lt.coeff_num = -1;
      lt.coeff_den = fact;
      lt.x = dd;
      lt.log_num = int64_t(n);
      lt.log_den = dd;
      lt.log_exp = t - 1;
      if (t == 1) {
        // ln^0 = 1: exact integer contribution
        lt.log_num = lt.log_den = 1;
        lt.log_exp = 0;
      }
      terms.push_back(lt);
    }
  }
  // ln^0 terms are exact: fold them into the base
  int64_t base = int64_t(n) - int64_t(delta1) - int64_t(delta2);
  std::vector<LogTerm> real_terms;
  for (auto& t : terms)
    if (t.log_exp > 0) real_terms.push_back(t);
  int64_t ell = ceil_log_expr(base, 1, real_terms);
  require(ell >= 1, "codimension bound is positive");
  AQCParams a;
  a.n = uint32_t(n);
  a.ell = uint32_t(ell);
  a.d_z = delta1;
  a.d_x = delta2;
  a.alphabet = q * q;
  a.construction = "cartesian24(" + std::to_string(s) + "," + std::to_string(m) + ")";
  return a;
}

AQCParams cartesian_params_cor29(uint32_t q, uint32_t s, uint32_t m, uint32_t ell,
                                 bool interchange) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) fail(Err::ConstraintViolated, what);
  };
  require(1 < s && s <= q, "1 < s <= q");
  require(m <= s - 1, "0 <= m <= s-1");
  require(ell >= 1 && ell <= m + 1, "ell <= m+1");
  if ((ell % 2 == 0) != (m % 2 == 1))
    fail(Err::ParityViolated, "ell must be even exactly when m is odd");
  int64_t dz4 = (2 * int64_t(s) - (int64_t(m) - ell + 1)) * (2 * int64_t(s) - (int64_t(m) + ell - 1));
  int64_t dx4 = (int64_t(m) - ell + 3) * (int64_t(m) + ell + 1);
  require(dz4 % 4 == 0 && dx4 % 4 == 0, "quarter products are integral");
  AQCParams a;
  a.n = s * s;
  a.ell = ell;
  a.d_z = uint32_t(dz4 / 4);
  a.d_x = uint32_t(dx4 / 4);
  if (interchange) std::swap(a.d_z, a.d_x);
  a.alphabet = q * q;
  a.construction = "cartesian29(" + std::to_string(s) + "," + std::to_string(m) + ")";
  return a;
}

uint32_t threshold_gap_bound(uint32_t q, uint32_t n, uint32_t ell) {
  // max over m in {0..ell-1} of
  //   ((q^2m - 1)(n+2) + (q^(2m+2) - q^2m)(ell - 2m)) / (q^(2m+2) - 1)
  mpq_class best(0);
  for (uint32_t m = 0; m < ell; ++m) {
    mpz_class q2m, q2m2;
    mpz_ui_pow_ui(q2m.get_mpz_t(), q, 2 * m);
    mpz_ui_pow_ui(q2m2.get_mpz_t(), q, 2 * m + 2);
    mpz_class num = (q2m - 1) * (n + 2) + (q2m2 - q2m) * (int64_t(ell) - 2 * int64_t(m));
    mpq_class val(num, q2m2 - 1);
    val.canonicalize();
    if (val > best) best = val;
  }
  // ceiling of a nonnegative rational
  mpz_class c = best.get_num() / best.get_den();
  if (c * best.get_den() != best.get_num()) c += 1;
  return uint32_t(c.get_ui());
}

std::vector<PairSummary> enumerate_pairs(uint32_t q) {
  const Semigroup& sg = Semigroup::get(q);
  std::vector<PairSummary> out;
  // improved pairs: delta1, delta2 >= 2 keeps C1 proper and C2 nonzero
  for (uint32_t d1 : sg.achievable()) {
    if (d1 < 2) continue;
    uint32_t k1 = sg.count_sigma_at_least(d1);
    uint32_t dmax = delta2_max(q, d1).delta2_max;
    uint32_t lam1 = 0;
    for (const auto& e : sg.elements())
      if (e.sigma >= d1) lam1 = std::max(lam1, e.lambda);
    for (uint32_t d2 : sg.achievable()) {
      if (d2 < 2 || d2 > dmax) continue;
      uint32_t k2 = sg.count_mu_below(d2);
      if (k1 <= k2) continue;
      out.push_back({d1, d2, k1 - k2, "improved", d1, d2, lam1});
    }
  }
  // small-codimension one-point pairs; (0,0) has C2 = {0} and is skipped
  for (uint32_t i = 0; i < q; ++i)
    for (uint32_t j = i; j < q; ++j) {
      if (i == 0 && j == 0) continue;
      uint32_t lam1_low = i * q + j * (q + 1);
      out.push_back({sg.n() - lam1_low, (i + 1) * (j + 1), j - i + 1, "lower", i, j, lam1_low});
      uint32_t lam1_up = (q * q - 1 - j) * q + (q - 1 - i) * (q + 1);
      out.push_back(
          {(i + 1) * (j + 1), sg.n() - lam1_low, j - i + 1, "upper", i, j, lam1_up});
    }
  return out;
}

PairSummary best_pair_search(uint32_t q, Objective objective, const PairConstraints& cs) {
  std::optional<PairSummary> best;
  auto better = [&](const PairSummary& a, const PairSummary& b) {
    // primary objective, then larger d_z, larger ell, smaller lambda1
    auto key = [&](const PairSummary& s) {
      uint64_t primary = objective == Objective::MaximizeDz ? s.d_z : s.ell;
      return std::make_tuple(primary, uint64_t(s.d_z), uint64_t(s.ell),
                             ~uint64_t(s.lambda1));
    };
    return key(a) > key(b);
  };
  for (const auto& s : enumerate_pairs(q)) {
    if (s.ell < cs.min_ell || s.d_z < cs.min_dz || s.d_x < cs.min_dx) continue;
    if (!best || better(s, *best)) best = s;
  }
  if (!best) fail(Err::NoFeasiblePair, "no pair satisfies the constraints");
  return *best;
}

NestedPair realize_pair(const CurveContext& ctx, const PairSummary& s) {
  if (s.family == "improved") return improved_pair(ctx, s.p1, s.p2);
  if (s.family == "lower") return small_codim_pair_lower(ctx, s.p1, s.p2);
  if (s.family == "upper") return small_codim_pair_upper(ctx, s.p1, s.p2);
  fail(Err::BadArgument, "unknown family " + s.family);
}

std::vector<SssCurveRow> sss_curve(uint32_t q, uint32_t t_req) {
  const Semigroup& sg = Semigroup::get(q);
  const uint32_t n = sg.n();
  const uint32_t g = sg.genus();
  struct Best {
    uint32_t r;
    uint32_t t;
    std::string tag;
  };
  std::map<uint32_t, Best> constr, goppa;
  auto offer = [](std::map<uint32_t, Best>& m, uint32_t ell, Best b) {
    auto it = m.find(ell);
    if (it == m.end() || b.r < it->second.r) m[ell] = std::move(b);
  };
  for (const auto& s : enumerate_pairs(q)) {
    uint32_t t = s.d_x - 1;
    if (t < t_req) continue;
    offer(constr, s.ell,
          {n - s.d_z + 1, t,
           s.family + "(" + std::to_string(s.p1) + "," + std::to_string(s.p2) + ")"});
  }
  // baseline: nested one-point codes judged by the Goppa bound only
  const auto& els = sg.elements();
  for (size_t a = 0; a < els.size(); ++a) {
    int64_t t_g = int64_t(els[a].lambda) - 2 * int64_t(g) + 1;
    if (t_g < int64_t(t_req)) continue;
    for (size_t b = a + 1; b < els.size(); ++b) {
      if (els[b].lambda >= n) break;  // Goppa gives nothing for the primary code
      uint32_t ell = uint32_t(b - a);
      offer(goppa, ell, {els[b].lambda + 1, uint32_t(std::max<int64_t>(t_g, 0)), ""});
    }
  }
  // cumulative minima: codimension >= ell qualifies
  auto cumulate = [](std::map<uint32_t, Best>& m) {
    std::optional<Best> run;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      if (!run || it->second.r < run->r) run = it->second;
      it->second = *run;
    }
    return m.empty() ? 0u : m.rbegin()->first;
  };
  uint32_t lmax_c = cumulate(constr);
  uint32_t lmax_g = cumulate(goppa);
  // fill gaps below each curve's maximum
  auto fill = [](std::map<uint32_t, Best>& m, uint32_t lmax) {
    std::optional<Best> next;
    for (uint32_t ell = lmax; ell >= 1; --ell) {
      auto it = m.find(ell);
      if (it != m.end())
        next = it->second;
      else if (next)
        m[ell] = *next;
    }
  };
  fill(constr, lmax_c);
  fill(goppa, lmax_g);

  std::vector<SssCurveRow> rows;
  for (uint32_t ell = 1; ell <= std::max(lmax_c, lmax_g); ++ell) {
    SssCurveRow row;
    row.ell = ell;
    row.gap_bound = threshold_gap_bound(q, n, ell);
    if (auto it = constr.find(ell); it != constr.end()) {
      row.r_construction = it->second.r;
      row.t_construction = it->second.t;
      row.construction = it->second.tag;
    }
    if (auto it = goppa.find(ell); it != goppa.end()) row.r_goppa = it->second.r;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hermnest
