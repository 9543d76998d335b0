// hermnest: nested code pairs from the Hermitian curve.
//
// Subcommands produce machine-readable tables (csv/markdown/json), build and
// audit code pairs, and run the verification suites. Exit codes: 0 success,
// 1 verification failure or corrupted shares, 2 usage/constraint error,
// 3 budget exceeded, 5 reconstruction underdetermined.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "hermnest/analysis.hpp"
#include "hermnest/constructions.hpp"
#include "hermnest/output.hpp"
#include "hermnest/sharing.hpp"
#include "hermnest/verify.hpp"

using namespace hermnest;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUndetermined = 5;

uint64_t default_budget() {
  if (const char* env = std::getenv("HERMNEST_BUDGET")) {
    char* end = nullptr;
    uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

OutputDocument semigroup_doc(uint32_t q) {
  const Semigroup& sg = Semigroup::get(q);
  OutputDocument doc;
  doc.command = "semigroup";
  doc.q = q;
  doc.columns = {"grid", "j"};
  for (uint32_t i = 0; i < q * q; ++i) doc.columns.push_back("i" + std::to_string(i));
  auto value = [&](const std::string& grid, uint32_t i, uint32_t j) {
    const auto& e = sg.at(uint64_t(i) * q + uint64_t(j) * (q + 1));
    return std::to_string(grid == "lambda" ? e.lambda : grid == "sigma" ? e.sigma : e.mu);
  };
  for (const std::string grid : {"lambda", "sigma", "mu"})
    for (int32_t j = int32_t(q) - 1; j >= 0; --j) {
      std::vector<std::string> row = {grid, std::to_string(j)};
      for (uint32_t i = 0; i < q * q; ++i) row.push_back(value(grid, i, uint32_t(j)));
      doc.add_row(std::move(row));
    }
  return doc;
}

std::string code_tuple(const AQCParams& a) {
  return "[[" + std::to_string(a.n) + "," + std::to_string(a.ell) + "," + std::to_string(a.d_z) +
         "/" + std::to_string(a.d_x) + "]]_" + std::to_string(a.alphabet);
}

OutputDocument pairs_doc(uint32_t q, const std::string& family, const std::string& objective,
                         const PairConstraints& cs) {
  const CurveContext& ctx = CurveContext::get(q);
  OutputDocument doc;
  doc.command = "pairs";
  doc.q = q;
  doc.columns = {"family", "params", "n", "l", "dz", "dx", "code", "t", "r"};
  auto emit = [&](const PairSummary& s) {
    NestedPair p = realize_pair(ctx, s);
    AQCParams a = css_params(p);
    RampParams rp = ramp_params(p);
    doc.add_row({s.family, "(" + std::to_string(s.p1) + "," + std::to_string(s.p2) + ")",
                 std::to_string(a.n), std::to_string(a.ell), std::to_string(a.d_z),
                 std::to_string(a.d_x), code_tuple(a), std::to_string(rp.t),
                 std::to_string(rp.r)});
  };
  if (!objective.empty()) {
    Objective obj = objective == "dz" ? Objective::MaximizeDz : Objective::MaximizeEll;
    emit(best_pair_search(q, obj, cs));
    return doc;
  }
  bool any = false;
  for (const auto& s : enumerate_pairs(q)) {
    if (family != "all" && s.family != family) continue;
    if (s.ell < cs.min_ell || s.d_z < cs.min_dz || s.d_x < cs.min_dx) continue;
    emit(s);
    any = true;
  }
  if (!any) fail(Err::NoFeasiblePair, "no pair matches the filters");
  return doc;
}

OutputDocument sss_curve_doc(uint32_t q, uint32_t t) {
  OutputDocument doc;
  doc.command = "sss-curve";
  doc.q = q;
  doc.columns = {"l", "r", "t", "construction", "r_goppa", "gap_bound"};
  for (const auto& row : sss_curve(q, t)) {
    doc.add_row({std::to_string(row.ell),
                 row.r_construction ? std::to_string(*row.r_construction) : "",
                 row.t_construction ? std::to_string(*row.t_construction) : "",
                 row.construction, row.r_goppa ? std::to_string(*row.r_goppa) : "",
                 std::to_string(row.gap_bound)});
  }
  return doc;
}

std::vector<uint16_t> read_secret_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::IoError, "cannot open " + path);
  std::vector<uint16_t> out;
  uint32_t v;
  while (in >> v) out.push_back(uint16_t(v));
  return out;
}

DealerSpec load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::IoError, "cannot open " + path);
  return DealerSpec::deserialize(in);
}

int run(int argc, char** argv) {
  CLI::App app{"nested code pairs from the Hermitian curve"};
  app.require_subcommand(1);
  uint64_t budget = default_budget();
  app.add_option("--budget", budget, "work cap for exhaustive enumerations");

  // semigroup
  auto* sgc = app.add_subcommand("semigroup", "pole orders with their order-bound values");
  uint32_t sg_q = 4;
  std::string sg_fmt = "csv";
  sgc->add_option("-q,--q", sg_q, "curve parameter")->required();
  sgc->add_option("--format", sg_fmt, "csv|markdown|json");

  // pairs
  auto* pc = app.add_subcommand("pairs", "nested pairs and their derived parameters");
  uint32_t p_q = 3;
  std::string p_family = "all", p_objective, p_fmt = "csv";
  PairConstraints cs;
  pc->add_option("-q,--q", p_q, "curve parameter")->required();
  pc->add_option("--family", p_family, "improved|lower|upper|all");
  pc->add_option("--objective", p_objective, "dz|ell (run the search instead of listing)");
  pc->add_option("--min-l", cs.min_ell, "minimum codimension");
  pc->add_option("--min-dz", cs.min_dz, "minimum d_z");
  pc->add_option("--min-dx", cs.min_dx, "minimum d_x");
  pc->add_option("--format", p_fmt, "csv|markdown|json");

  // sss-curve
  auto* sc = app.add_subcommand("sss-curve", "reconstruction-number trade-off data");
  uint32_t s_q = 3, s_t = 0;
  std::string s_fmt = "csv";
  sc->add_option("-q,--q", s_q, "curve parameter")->required();
  sc->add_option("-t,--t", s_t, "required privacy number");
  sc->add_option("--format", s_fmt, "csv|markdown|json");

  // verify
  auto* vc = app.add_subcommand("verify", "run a verification suite");
  uint32_t v_q = 2;
  std::string v_suite = "all";
  vc->add_option("-q,--q", v_q, "curve parameter")->required();
  vc->add_option("--suite", v_suite, "semigroup|lemmas|duality|inclusion|dims|distances|sharing|all");

  // make-scheme
  auto* mc = app.add_subcommand("make-scheme", "write a dealer scheme file");
  uint32_t m_q = 2, m_i = 0, m_j = 1, m_d1 = 0, m_d2 = 0;
  std::string m_family = "lower", m_out, m_mode = "seeded";
  mc->add_option("-q,--q", m_q, "curve parameter")->required();
  mc->add_option("--family", m_family, "improved|lower|upper");
  mc->add_option("--i", m_i, "row index (lower/upper)");
  mc->add_option("--j", m_j, "column index (lower/upper)");
  mc->add_option("--delta1", m_d1, "designed distance of C1 (improved)");
  mc->add_option("--delta2", m_d2, "designed distance of the dual side (improved)");
  mc->add_option("--mode", m_mode, "seeded|external randomness");
  mc->add_option("-o,--out", m_out, "output path")->required();

  // deal
  auto* dc = app.add_subcommand("deal", "deal shares for a secret");
  std::string d_scheme, d_secret, d_out;
  uint64_t d_seed = 0;
  dc->add_option("--scheme", d_scheme, "scheme file")->required();
  dc->add_option("--secret", d_secret, "secret file (one element index per line)")->required();
  dc->add_option("--seed", d_seed, "dealer randomness seed");
  dc->add_option("-o,--out", d_out, "share file")->required();

  // reconstruct
  auto* rc = app.add_subcommand("reconstruct", "reconstruct a secret from shares");
  std::string r_scheme, r_shares, r_out;
  rc->add_option("--scheme", r_scheme, "scheme file")->required();
  rc->add_option("--shares", r_shares, "share file")->required();
  rc->add_option("-o,--out", r_out, "secret output path");

  CLI11_PARSE(app, argc, argv);

  if (sgc->parsed()) {
    semigroup_doc(sg_q).render(std::cout, parse_format(sg_fmt));
    return kExitOk;
  }
  if (pc->parsed()) {
    pairs_doc(p_q, p_family, p_objective, cs).render(std::cout, parse_format(p_fmt));
    return kExitOk;
  }
  if (sc->parsed()) {
    sss_curve_doc(s_q, s_t).render(std::cout, parse_format(s_fmt));
    return kExitOk;
  }
  if (vc->parsed()) {
    std::vector<std::string> suites =
        v_suite == "all" ? suite_names() : std::vector<std::string>{v_suite};
    bool all_ok = true;
    for (const auto& name : suites) {
      SuiteReport rep = run_suite(name, v_q, budget);
      for (const auto& line : rep.lines) {
        const char* st = line.status == CheckLine::Pass   ? "PASS"
                         : line.status == CheckLine::Fail ? "FAIL"
                                                          : "SKIPPED";
        std::cout << st << ' ' << rep.suite << '/' << line.name;
        if (!line.detail.empty()) std::cout << " (" << line.detail << ")";
        std::cout << '\n';
      }
      all_ok = all_ok && rep.all_passed();
    }
    return all_ok ? kExitOk : kExitVerifyFail;
  }
  if (mc->parsed()) {
    const CurveContext& ctx = CurveContext::get(m_q);
    NestedPair pair = m_family == "improved" ? improved_pair(ctx, m_d1, m_d2)
                      : m_family == "upper"  ? small_codim_pair_upper(ctx, m_i, m_j)
                                             : small_codim_pair_lower(ctx, m_i, m_j);
    DealerSpec spec(std::move(pair), m_mode == "external" ? RandomnessMode::External
                                                          : RandomnessMode::Seeded);
    std::ofstream out(m_out);
    if (!out) fail(Err::IoError, "cannot write " + m_out);
    spec.serialize(out);
    std::cout << "scheme " << spec.scheme_id() << ": n=" << spec.n() << " l=" << spec.ell()
              << " k2=" << spec.k2() << '\n';
    return kExitOk;
  }
  if (dc->parsed()) {
    DealerSpec spec = load_scheme(d_scheme);
    ShareBundle b = deal(spec, read_secret_file(d_secret), d_seed);
    std::ofstream out(d_out);
    if (!out) fail(Err::IoError, "cannot write " + d_out);
    b.serialize(out);
    std::cout << "dealt " << b.shares.size() << " shares (scheme " << b.scheme_id << ")\n";
    return kExitOk;
  }
  if (rc->parsed()) {
    DealerSpec spec = load_scheme(r_scheme);
    std::ifstream in(r_shares);
    if (!in) fail(Err::IoError, "cannot open " + r_shares);
    ShareBundle b = ShareBundle::deserialize(in, spec.scheme_id());
    ReconstructResult res = reconstruct(spec, b);
    if (!res.secret) {
      std::cout << "undetermined:";
      for (uint32_t c : res.undetermined_coordinates) std::cout << ' ' << c;
      std::cout << '\n';
      return kExitUndetermined;
    }
    std::ostream* os = &std::cout;
    std::ofstream fout;
    if (!r_out.empty()) {
      fout.open(r_out);
      if (!fout) fail(Err::IoError, "cannot write " + r_out);
      os = &fout;
    }
    for (uint16_t v : *res.secret) *os << v << '\n';
    return kExitOk;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Err::BudgetExceeded:
        return kExitBudget;
      case Err::InconsistentShares:
        return kExitVerifyFail;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
