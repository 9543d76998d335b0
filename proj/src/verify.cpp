#include "hermnest/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hermnest/analysis.hpp"
#include "hermnest/constructions.hpp"
#include "hermnest/sharing.hpp"

namespace hermnest {

namespace {

void pass(SuiteReport& r, const std::string& name, const std::string& detail = "") {
  r.lines.push_back({name, CheckLine::Pass, detail});
}
void failln(SuiteReport& r, const std::string& name, const std::string& detail) {
  r.lines.push_back({name, CheckLine::Fail, detail});
}
void skip(SuiteReport& r, const std::string& name, const std::string& detail) {
  r.lines.push_back({name, CheckLine::Skip, detail});
}
void check(SuiteReport& r, bool ok, const std::string& name, const std::string& detail = "") {
  if (ok)
    pass(r, name, detail);
  else
    failln(r, name, detail.empty() ? "failed" : detail);
}

}  // namespace

SuiteReport verify_semigroup(uint32_t q) {
  SuiteReport r{"semigroup", {}};
  const Semigroup& sg = Semigroup::get(q);
  check(r, sg.elements().size() == size_t(q) * q * q, "h_star_size",
        std::to_string(sg.elements().size()));
  uint32_t gaps = 0;
  for (uint32_t x = 0; x < 2 * sg.genus() + 1; ++x) gaps += !h_of_q_contains(q, x);
  check(r, gaps == sg.genus(), "gap_count_equals_genus", std::to_string(gaps));

  uint32_t bad_sigma = 0, bad_mu = 0;
  for (const auto& e : sg.elements()) {
    if (e.sigma != sigma_oracle(q, e.lambda)) ++bad_sigma;
    if (e.mu != mu_oracle(q, e.lambda)) ++bad_mu;
  }
  check(r, bad_sigma == 0, "sigma_formula_equals_oracle",
        std::to_string(sg.elements().size()) + " elements");
  check(r, bad_mu == 0, "mu_formula_equals_oracle",
        std::to_string(sg.elements().size()) + " elements");

  bool mirror_ok = true;
  for (const auto& e : sg.elements()) {
    uint32_t mi = q * q - 1 - e.i, mj = q - 1 - e.j;
    const auto& m = sg.at(uint64_t(mi) * q + uint64_t(mj) * (q + 1));
    if (m.mu != e.sigma || m.i != mi || m.j != mj) mirror_ok = false;
  }
  check(r, mirror_ok, "mirror_involution_swaps_sigma_mu");
  return r;
}

SuiteReport verify_lemmas(uint32_t q) {
  SuiteReport r{"lemmas", {}};
  for (const auto& lr : verify_appendix_lemmas(q)) {
    std::string detail = std::to_string(lr.cases_checked) + " cases";
    if (!lr.passed) detail += "; first counterexample: " + lr.counterexample;
    check(r, lr.passed, lr.name, detail);
  }
  return r;
}

SuiteReport verify_duality(uint32_t q) {
  SuiteReport r{"duality", {}};
  if (q > 4) {
    skip(r, "code_level_identities", "rank tests not run for q > 4");
    return r;
  }
  const CurveContext& ctx = CurveContext::get(q);
  const Semigroup& sg = Semigroup::get(q);
  const int64_t star = int64_t(q) * q * q + int64_t(q) * q - q - 2;

  uint32_t bad = 0;
  for (const auto& e : sg.elements()) {
    LinearCode lhs = LinearCode::one_point(ctx, e.lambda).dual();
    LinearCode rhs = LinearCode::one_point(ctx, star - e.lambda);
    if (!lhs.same_row_space(rhs)) ++bad;
  }
  check(r, bad == 0, "onepoint_dual_identity", std::to_string(sg.elements().size()) + " codes");

  bad = 0;
  for (uint32_t d : sg.achievable()) {
    LinearCode e = LinearCode::improved_primary(ctx, d);
    LinearCode c = LinearCode::improved_dual_perp(ctx, d).dual();
    if (!e.same_row_space(c)) ++bad;
  }
  check(r, bad == 0, "improved_primary_equals_improved_dual",
        std::to_string(sg.achievable().size()) + " deltas");

  bad = 0;
  uint32_t d0 = q * q - q;
  for (uint32_t d : sg.achievable()) {
    if (d <= d0) continue;
    LinearCode e = LinearCode::improved_primary(ctx, d);
    LinearCode c = LinearCode::one_point(ctx, int64_t(sg.n()) - d);
    if (!e.same_row_space(c)) ++bad;
  }
  check(r, bad == 0, "improved_equals_onepoint_above_corner");
  {
    LinearCode e = LinearCode::improved_primary(ctx, d0);
    LinearCode c = LinearCode::one_point(ctx, int64_t(sg.n()) - d0);
    check(r, e.contains_code(c) && c.k() < e.k(), "strict_containment_at_corner",
          "dims " + std::to_string(c.k()) + " < " + std::to_string(e.k()));
  }
  return r;
}

SuiteReport verify_inclusion(uint32_t q) {
  SuiteReport r{"inclusion", {}};
  const Semigroup& sg = Semigroup::get(q);
  uint32_t bad = 0, count = 0;
  for (uint32_t d1 : sg.achievable()) {
    if (d1 < 2) continue;
    ++count;
    if (delta2_max(q, d1).delta2_max != delta2_max_oracle(q, d1)) ++bad;
  }
  check(r, bad == 0, "delta2_max_formula_equals_oracle", std::to_string(count) + " deltas");

  // symmetry of the inclusion relation under swapping the two designed
  // distances, stated at the oracle level
  auto min_mu_where_sigma_below = [&](uint32_t d) { return delta2_max_oracle(q, d); };
  auto min_sigma_where_mu_below = [&](uint32_t d) {
    uint32_t best = sg.n() + 1;
    bool any = false;
    for (const auto& e : sg.elements())
      if (e.mu < d) {
        any = true;
        best = std::min(best, e.sigma);
      }
    return any ? best : sg.n() + 1;
  };
  bool sym_ok = true;
  for (uint32_t d1 : sg.achievable())
    for (uint32_t d2 : sg.achievable()) {
      bool a = d2 <= min_mu_where_sigma_below(d1);
      bool b = d1 <= min_sigma_where_mu_below(d2);  // dual reading of the same inclusion
      if (a != b) sym_ok = false;
    }
  check(r, sym_ok, "inclusion_symmetry");
  if (q == 4) {
    check(r, delta2_max(4, 6).delta2_max == 48, "threshold_at_6_is_48");
    check(r, delta2_max_oracle(4, 48) >= 8, "asymmetry_beyond_6",
          "delta2_max(48) = " + std::to_string(delta2_max_oracle(4, 48)));
  }
  return r;
}

SuiteReport verify_dims(uint32_t q) {
  SuiteReport r{"dims", {}};
  const Semigroup& sg = Semigroup::get(q);
  uint32_t bad_bound = 0, bad_equal = 0;
  for (uint32_t d : sg.achievable()) {
    DimBoundResult b = dim_bound(q, d);
    if (b.bound > int64_t(b.exact)) ++bad_bound;
    bool exact_rule = b.rule == DimRule::Prop2Generic || b.rule == DimRule::Prop2HighDelta;
    if (exact_rule && b.bound != int64_t(b.exact)) ++bad_equal;
  }
  check(r, bad_bound == 0, "dim_bound_below_exact", std::to_string(sg.achievable().size()) + " deltas");
  check(r, bad_equal == 0, "dim_bound_exact_in_onepoint_regimes");

  uint32_t bad_codim = 0, pairs = 0;
  for (uint32_t d1 : sg.achievable()) {
    if (d1 < 2) continue;
    uint32_t dmax = delta2_max(q, d1).delta2_max;
    for (uint32_t d2 : sg.achievable()) {
      if (d2 > dmax) continue;
      ++pairs;
      CodimBoundResult cb = codim_bound(q, d1, d2);
      int64_t exact = int64_t(sg.count_sigma_at_least(d1)) - sg.count_mu_below(d2);
      if (cb.bound > exact) ++bad_codim;
    }
  }
  check(r, bad_codim == 0, "codim_bound_below_exact", std::to_string(pairs) + " pairs");
  return r;
}

SuiteReport verify_distances(uint32_t q, uint64_t budget) {
  SuiteReport r{"distances", {}};
  const Semigroup& sg = Semigroup::get(q);
  auto affordable = [&](uint32_t k) {
    long double w = 1;
    const long double ord = q * q;
    for (uint32_t i = 0; i < k; ++i) w *= ord;
    return w <= (long double)budget;
  };
  if (q > 3) {
    skip(r, "exhaustive_distances", "enumeration not run for q > 3");
    return r;
  }
  const CurveContext& ctx = CurveContext::get(q);

  uint32_t checked = 0, skipped = 0, bad = 0;
  for (uint32_t d : sg.achievable()) {
    LinearCode e = LinearCode::improved_primary(ctx, d);
    if (!affordable(e.k())) {
      ++skipped;
      continue;
    }
    ++checked;
    // stop_at d-1: only a counterexample can exit early
    if (min_distance(e, budget, d - 1) != d) ++bad;
  }
  check(r, bad == 0, "improved_code_distance_is_designed_distance",
        std::to_string(checked) + " checked");
  if (skipped)
    skip(r, "improved_code_distance_large_dims", std::to_string(skipped) + " deltas over budget");

  if (q == 2) {
    // order bound on duals is an equality here
    uint32_t bad3 = 0;
    for (const auto& e : sg.elements()) {
      LinearCode dual = LinearCode::one_point(ctx, e.lambda).dual();
      if (dual.k() == 0) continue;
      uint32_t bound = sg.n() + 1;
      for (const auto& g : sg.elements())
        if (g.lambda > e.lambda) bound = std::min(bound, g.mu);
      if (bound > sg.n()) continue;
      if (min_distance(dual, budget) != bound) ++bad3;
    }
    check(r, bad3 == 0, "dual_order_bound_equality");

    // small-codimension pairs, both corners, against the closed formulas
    for (auto [i, j] : {std::pair<uint32_t, uint32_t>{0, 1}, {1, 1}}) {
      for (bool upperside : {false, true}) {
        NestedPair p = upperside ? small_codim_pair_upper(ctx, i, j)
                                 : small_codim_pair_lower(ctx, i, j);
        std::string tag = (upperside ? "upper(" : "lower(") + std::to_string(i) + "," +
                          std::to_string(j) + ")";
        uint32_t drel = relative_distance(p, budget);
        check(r, drel == p.d_rel->value, tag + "_relative_distance",
              "measured " + std::to_string(drel) + ", formula " + std::to_string(p.d_rel->value));
        NestedPair dualp = make_pair(p.c2.dual(), p.c1.dual());
        uint32_t dreld = relative_distance(dualp, budget);
        check(r, dreld == p.d_rel_dual->value, tag + "_dual_relative_distance",
              "measured " + std::to_string(dreld) + ", formula " +
                  std::to_string(p.d_rel_dual->value));
        // the propositions guarantee one inequality direction apiece
        uint32_t d1 = min_distance(p.c1, budget);
        uint32_t d2p = min_distance(p.c2.dual(), budget);
        if (upperside) {
          check(r, drel >= d1, tag + "_primal_inequality",
                "d_rel " + std::to_string(drel) + " vs d(C1) " + std::to_string(d1));
        } else {
          check(r, dreld >= d2p, tag + "_dual_inequality",
                "d_rel_dual " + std::to_string(dreld) + " vs d(C2perp) " + std::to_string(d2p));
        }
      }
    }
  }
  return r;
}

SuiteReport verify_sharing(uint32_t q, uint64_t budget) {
  SuiteReport r{"sharing", {}};
  if (q > 3) {
    skip(r, "sharing_audit", "audits not run for q > 3");
    return r;
  }
  const CurveContext& ctx = CurveContext::get(q);
  std::mt19937_64 rng(20240901);
  auto random_secret = [&](const DealerSpec& spec) {
    std::vector<uint16_t> s(spec.ell());
    for (auto& v : s) v = uint16_t(rng() % ctx.field().order());
    return s;
  };
  auto round_trips = [&](const DealerSpec& spec, uint32_t trials, const std::string& tag) {
    for (uint32_t t = 0; t < trials; ++t) {
      auto secret = random_secret(spec);
      ShareBundle b = deal(spec, secret, rng());
      auto res = reconstruct(spec, b);
      if (!res.secret || *res.secret != secret) {
        failln(r, tag + "_round_trip", "trial " + std::to_string(t));
        return;
      }
    }
    pass(r, tag + "_round_trip", std::to_string(trials) + " seeded trials");
  };

  if (q == 2) {
    struct Case {
      std::string tag;
      NestedPair pair;
    };
    std::vector<Case> cases;
    for (auto [i, j] : {std::pair<uint32_t, uint32_t>{0, 1}, {1, 1}}) {
      cases.push_back({"lower(" + std::to_string(i) + "," + std::to_string(j) + ")",
                       small_codim_pair_lower(ctx, i, j)});
      cases.push_back({"upper(" + std::to_string(i) + "," + std::to_string(j) + ")",
                       small_codim_pair_upper(ctx, i, j)});
    }
    for (auto [d1, d2] : {std::pair<uint32_t, uint32_t>{4, 2}, {5, 2}, {4, 3}})
      cases.push_back({"improved(" + std::to_string(d1) + "," + std::to_string(d2) + ")",
                       improved_pair(ctx, d1, d2)});

    for (auto& c : cases) {
      uint32_t drel = relative_distance(c.pair, budget);
      NestedPair dualp = make_pair(c.pair.c2.dual(), c.pair.c1.dual());
      uint32_t dreld = relative_distance(dualp, budget);
      DealerSpec spec(c.pair);
      uint64_t audit_budget = budget;
      uint32_t t = exact_privacy_number(spec, audit_budget);
      uint32_t rr = exact_reconstruction_number(spec, audit_budget);
      check(r, t == dreld - 1, c.tag + "_privacy_number",
            "audit " + std::to_string(t) + ", distances say " + std::to_string(dreld - 1));
      check(r, rr == ctx.n() - drel + 1, c.tag + "_reconstruction_number",
            "audit " + std::to_string(rr) + ", distances say " +
                std::to_string(ctx.n() - drel + 1));
      round_trips(spec, 100, c.tag);
      if (t > 0) {
        // perfect privacy at size t on every subset of that size
        std::vector<uint32_t> idx(t);
        for (uint32_t k = 0; k < t; ++k) idx[k] = k + 1;
        bool ok = true;
        for (;;) {
          if (!perfect_privacy_multiset_check(spec, idx, budget)) {
            ok = false;
            break;
          }
          int32_t pos = int32_t(t) - 1;
          while (pos >= 0 && idx[pos] == ctx.n() - t + pos + 1) --pos;
          if (pos < 0) break;
          ++idx[pos];
          for (uint32_t k = pos + 1; k < t; ++k) idx[k] = idx[k - 1] + 1;
        }
        check(r, ok, c.tag + "_perfect_privacy_multisets", "size " + std::to_string(t));
      }
    }
    return r;
  }

  // q == 3: sampled audit with extremal certificates on a small pair
  {
    DealerSpec spec(improved_pair(ctx, 12, 2));
    round_trips(spec, 20, "improved(12,2)");
  }
  {
    NestedPair p = small_codim_pair_lower(ctx, 1, 1);  // k1 = 5: enumerable
    uint32_t drel = relative_distance(p, budget);
    uint32_t t_thm = p.d_rel_dual->value - 1;
    uint32_t r_thm = ctx.n() - drel + 1;
    DealerSpec spec(p);
    round_trips(spec, 20, "lower(1,1)");

    // a reconstruction certificate: the zero set of a minimum-weight word of
    // C1 \ C2 has size r-1 and cannot determine the secret
    GfMatrix ext = coset_extension(p.c1, p.c2);
    std::vector<uint16_t> word(ctx.n(), 0);
    {
      // scan c = ext-row + u*C2 for a min-weight representative
      uint32_t bestw = ctx.n() + 1;
      std::vector<uint16_t> best;
      std::vector<uint16_t> u(p.c2.k(), 0);
      const uint32_t order = ctx.field().order();
      for (;;) {
        std::vector<uint16_t> w(ctx.n(), 0);
        add_scaled_row(ctx.field(), w.data(), ext.row(0), 1, ctx.n());
        for (uint32_t k = 0; k < u.size(); ++k)
          add_scaled_row(ctx.field(), w.data(), p.c2.generators().row(k), u[k], ctx.n());
        uint32_t wt = 0;
        for (auto v : w) wt += v != 0;
        if (wt < bestw) {
          bestw = wt;
          best = w;
        }
        uint32_t pos = 0;
        while (pos < u.size() && u[pos] == order - 1) u[pos++] = 0;
        if (pos == u.size()) break;
        ++u[pos];
      }
      word = best;
      check(r, bestw == drel, "lower(1,1)_witness_weight", std::to_string(bestw));
    }
    ShareBundle full = deal(spec, random_secret(spec), rng());
    ShareBundle partial;
    partial.scheme_id = full.scheme_id;
    for (uint32_t k = 0; k < ctx.n(); ++k)
      if (word[k] == 0) partial.shares[k + 1] = full.shares.at(k + 1);
    check(r, partial.shares.size() == r_thm - 1, "lower(1,1)_certificate_size");
    auto res = reconstruct(spec, partial);
    check(r, !res.secret.has_value(), "lower(1,1)_r_minus_1_undetermined",
          std::to_string(res.undetermined_coordinates.size()) + " free coordinates");

    // sampled size-r subsets all determine; sampled size-t subsets all private
    bool det_ok = true;
    for (uint32_t trial = 0; trial < 50 && det_ok; ++trial) {
      std::vector<uint32_t> all(ctx.n());
      for (uint32_t k = 0; k < ctx.n(); ++k) all[k] = k + 1;
      std::shuffle(all.begin(), all.end(), rng);
      ShareBundle sub;
      sub.scheme_id = full.scheme_id;
      for (uint32_t k = 0; k < r_thm; ++k) sub.shares[all[k]] = full.shares.at(all[k]);
      if (!reconstruct(spec, sub).secret.has_value()) det_ok = false;
    }
    check(r, det_ok, "lower(1,1)_sampled_r_subsets_determine", "50 samples");
    bool priv_ok = true;
    const GfMatrix fullb = spec.stacked_basis();
    for (uint32_t trial = 0; trial < 50 && priv_ok; ++trial) {
      std::vector<uint32_t> all(ctx.n());
      for (uint32_t k = 0; k < ctx.n(); ++k) all[k] = k;
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<uint32_t> A(all.begin(), all.begin() + t_thm);
      GfMatrix m1(ctx.field(), 0, A.size()), m2(ctx.field(), 0, A.size());
      for (size_t row = 0; row < fullb.rows(); ++row) {
        std::vector<uint16_t> v(A.size());
        for (size_t c = 0; c < A.size(); ++c) v[c] = fullb.at(row, A[c]);
        m1.append_row(v);
      }
      for (size_t row = 0; row < spec.c2_basis().rows(); ++row) {
        std::vector<uint16_t> v(A.size());
        for (size_t c = 0; c < A.size(); ++c) v[c] = spec.c2_basis().at(row, A[c]);
        m2.append_row(v);
      }
      if (m1.rank() != m2.rank()) priv_ok = false;
    }
    check(r, priv_ok, "lower(1,1)_sampled_t_subsets_private", "50 samples");
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"semigroup", "lemmas", "duality", "inclusion", "dims", "distances", "sharing"};
}

SuiteReport run_suite(const std::string& name, uint32_t q, uint64_t budget) {
  if (name == "semigroup") return verify_semigroup(q);
  if (name == "lemmas") return verify_lemmas(q);
  if (name == "duality") return verify_duality(q);
  if (name == "inclusion") return verify_inclusion(q);
  if (name == "dims") return verify_dims(q);
  if (name == "distances") return verify_distances(q, budget);
  if (name == "sharing") return verify_sharing(q, budget);
  fail(Err::BadArgument, "unknown suite '" + name + "'");
}

}  // namespace hermnest
