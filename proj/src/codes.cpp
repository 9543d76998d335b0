#include "hermnest/codes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace hermnest {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Formula: return "formula";
    case Provenance::BruteForce: return "bruteforce";
    case Provenance::Padded: return "padded";
  }
  return "?";
}

LinearCode LinearCode::one_point(const CurveContext& ctx, int64_t lambda) {
  const Semigroup& sg = Semigroup::get(ctx.q());
  std::vector<uint32_t> lambdas;
  for (const auto& e : sg.elements())
    if (int64_t(e.lambda) <= lambda) lambdas.push_back(e.lambda);
  LinearCode c;
  c.ctx_ = &ctx;
  c.descriptor_ = "OnePoint(" + std::to_string(lambda) + ")";
  c.lambdas_ = lambdas;
  c.gen_ = GfMatrix(ctx.field(), 0, ctx.n());
  for (uint32_t lam : lambdas) c.gen_.append_row(ctx.evaluate(ctx.monomial_for(lam)));
  return c;
}

LinearCode LinearCode::improved_primary(const CurveContext& ctx, uint32_t delta) {
  const Semigroup& sg = Semigroup::get(ctx.q());
  std::vector<uint32_t> lambdas;
  for (const auto& e : sg.elements())
    if (e.sigma >= delta) lambdas.push_back(e.lambda);
  LinearCode c;
  c.ctx_ = &ctx;
  c.descriptor_ = "ImprovedPrimary(" + std::to_string(delta) + ")";
  c.lambdas_ = lambdas;
  c.gen_ = GfMatrix(ctx.field(), 0, ctx.n());
  for (uint32_t lam : lambdas) c.gen_.append_row(ctx.evaluate(ctx.monomial_for(lam)));
  return c;
}

LinearCode LinearCode::improved_dual_perp(const CurveContext& ctx, uint32_t delta) {
  const Semigroup& sg = Semigroup::get(ctx.q());
  std::vector<uint32_t> lambdas;
  for (const auto& e : sg.elements())
    if (e.mu < delta) lambdas.push_back(e.lambda);
  LinearCode c;
  c.ctx_ = &ctx;
  c.descriptor_ = "ImprovedDualPerpSpan(" + std::to_string(delta) + ")";
  c.lambdas_ = lambdas;
  c.gen_ = GfMatrix(ctx.field(), 0, ctx.n());
  for (uint32_t lam : lambdas) c.gen_.append_row(ctx.evaluate(ctx.monomial_for(lam)));
  return c;
}

LinearCode LinearCode::raw(const CurveContext& ctx, const GfMatrix& rows, std::string descriptor) {
  LinearCode c;
  c.ctx_ = &ctx;
  c.gen_ = rows.rref();  // canonical independent rows
  c.descriptor_ = std::move(descriptor);
  return c;
}

LinearCode LinearCode::dual() const {
  LinearCode c;
  c.ctx_ = ctx_;
  c.gen_ = gen_.rows() ? gen_.nullspace() : GfMatrix(ctx_->field(), 0, n());
  if (gen_.rows() == 0) {
    // dual of the zero code is the full space
    GfMatrix id(ctx_->field(), 0, n());
    for (uint32_t r = 0; r < n(); ++r) {
      std::vector<uint16_t> v(n(), 0);
      v[r] = 1;
      id.append_row(v);
    }
    c.gen_ = id;
  }
  c.descriptor_ = "DualOf(" + descriptor_ + ")";
  return c;
}

bool LinearCode::same_row_space(const LinearCode& other) const {
  return canonical() == other.canonical();
}

bool LinearCode::contains_code(const LinearCode& other) const {
  if (lambdas_ && other.lambdas_)
    return std::includes(lambdas_->begin(), lambdas_->end(), other.lambdas_->begin(),
                         other.lambdas_->end());
  if (other.k() > k()) return false;
  return gen_.stacked(other.gen_).rank() == k();
}

void LinearCode::serialize(std::ostream& os) const {
  os << ctx_->q() << ' ' << n() << ' ' << k() << ' ' << descriptor_ << '\n';
  for (size_t r = 0; r < gen_.rows(); ++r) {
    for (size_t c = 0; c < gen_.cols(); ++c) os << (c ? " " : "") << gen_.at(r, c);
    os << '\n';
  }
}

LinearCode LinearCode::deserialize(std::istream& is) {
  uint32_t q, n, k;
  std::string desc;
  if (!(is >> q >> n >> k >> desc)) fail(Err::IoError, "bad code header");
  const CurveContext& ctx = CurveContext::get(q);
  if (n != ctx.n()) fail(Err::IoError, "code length does not match q^3");
  GfMatrix gen(ctx.field(), 0, n);
  for (uint32_t r = 0; r < k; ++r) {
    std::vector<uint16_t> row(n);
    for (uint32_t c = 0; c < n; ++c) {
      uint32_t v;
      if (!(is >> v) || v >= ctx.field().order()) fail(Err::IoError, "bad element index");
      row[c] = uint16_t(v);
    }
    gen.append_row(row);
  }
  LinearCode code;
  code.ctx_ = &ctx;
  code.gen_ = gen;
  code.descriptor_ = desc;
  return code;
}

NestedPair make_pair(LinearCode c1, LinearCode c2) {
  if (c2.k() >= c1.k()) {
    if (c1.same_row_space(c2)) fail(Err::ZeroCodimension, "codes coincide");
    fail(Err::NotNested, "dim C2 >= dim C1");
  }
  if (!c1.contains_code(c2)) fail(Err::NotNested, "C2 is not inside C1");
  NestedPair p;
  p.ell = c1.k() - c2.k();
  p.c1 = std::move(c1);
  p.c2 = std::move(c2);
  return p;
}

GfMatrix coset_extension(const LinearCode& c1, const LinearCode& c2) {
  const Field& f = c1.ctx().field();
  GfMatrix ext(f, 0, c1.n());
  GfMatrix acc = c2.generators();
  size_t rank = acc.rank();
  for (size_t r = 0; r < c1.generators().rows(); ++r) {
    auto row = c1.generators().row_vec(r);
    GfMatrix trial = acc;
    trial.append_row(row);
    size_t nr = trial.rank();
    if (nr > rank) {
      ext.append_row(row);
      acc = std::move(trial);
      rank = nr;
    }
  }
  return ext;
}

namespace {

// Exhaustive weight search over  { pivot + sum s_i * free_i }  with early exit.
class WeightSearch {
public:
  WeightSearch(const Field& f, size_t n, uint32_t stop_at)
      : f_(f), n_(n), order_(f.order()), stop_at_(stop_at), best_(uint32_t(n) + 1) {}

  void add_free_row(const std::vector<uint16_t>& row) {
    scaled_.emplace_back(size_t(order_) * n_);
    auto& block = scaled_.back();
    for (uint32_t s = 0; s < order_; ++s) {
      std::fill_n(&block[size_t(s) * n_], n_, 0);
      add_scaled_row(f_, &block[size_t(s) * n_], row.data(), uint16_t(s), n_);
    }
  }

  void run(const std::vector<uint16_t>& start) {
    scratch_.assign(scaled_.size() + 1, std::vector<uint16_t>(n_));
    scratch_[0] = start;
    dfs(0);
  }

  uint32_t best() const { return best_; }
  bool hit_stop() const { return stop_at_ && best_ <= stop_at_; }

private:
  void note(uint32_t w) {
    if (w < best_) best_ = w;
  }
  void dfs(size_t depth) {
    if (hit_stop()) return;
    const auto& cur = scratch_[depth];
    if (depth == scaled_.size()) {
      uint32_t w = 0;
      for (size_t k = 0; k < n_; ++k) w += cur[k] != 0;
      note(w);
      return;
    }
    const auto& block = scaled_[depth];
    if (depth + 1 == scaled_.size()) {
      // fold the last level into the weight count
      if (f_.is_binary()) {
        for (uint32_t s = 0; s < order_; ++s) {
          const uint16_t* srow = &block[size_t(s) * n_];
          uint32_t w = 0;
          for (size_t k = 0; k < n_; ++k) w += uint16_t(cur[k] ^ srow[k]) != 0;
          note(w);
          if (hit_stop()) return;
        }
      } else {
        for (uint32_t s = 0; s < order_; ++s) {
          const uint16_t* srow = &block[size_t(s) * n_];
          uint32_t w = 0;
          for (size_t k = 0; k < n_; ++k) w += f_.add(cur[k], srow[k]) != 0;
          note(w);
          if (hit_stop()) return;
        }
      }
      return;
    }
    auto& child = scratch_[depth + 1];
    for (uint32_t s = 0; s < order_; ++s) {
      const uint16_t* srow = &block[size_t(s) * n_];
      if (f_.is_binary()) {
        for (size_t k = 0; k < n_; ++k) child[k] = cur[k] ^ srow[k];
      } else {
        for (size_t k = 0; k < n_; ++k) child[k] = f_.add(cur[k], srow[k]);
      }
      dfs(depth + 1);
      if (hit_stop()) return;
    }
  }

  const Field& f_;
  size_t n_;
  uint32_t order_, stop_at_, best_;
  std::vector<std::vector<uint16_t>> scaled_;
  std::vector<std::vector<uint16_t>> scratch_;
};

void check_budget(const Field& f, size_t k, uint64_t budget) {
  long double work = 1;
  for (size_t i = 0; i < k; ++i) work *= f.order();
  if (work > (long double)budget) {
    std::ostringstream os;
    os << "requires " << f.order() << "^" << k << " ~= " << std::scientific << double(work)
       << " message vectors, budget " << budget;
    fail(Err::BudgetExceeded, os.str());
  }
}

// Min weight over span(proj_rows + free_rows) where the proj_rows coefficient
// vector is nonzero and normalized projectively (first nonzero scalar = 1).
// Tasks split across workers at the pivot level.
uint32_t projective_min_weight(const Field& f, const GfMatrix& proj, const GfMatrix& free_part,
                               uint32_t stop_at) {
  const size_t n = proj.cols();
  struct Task {
    size_t pivot;
  };
  std::vector<Task> tasks;
  for (size_t t = 0; t < proj.rows(); ++t) tasks.push_back({t});
  std::atomic<uint32_t> best{uint32_t(n) + 1};
  std::atomic<size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      uint32_t cur_best = best.load();
      if (stop_at && cur_best <= stop_at) return;
      size_t t = tasks[idx].pivot;
      WeightSearch ws(f, n, stop_at);
      // pivot row fixed at scalar 1; rows after it and all free rows range fully
      for (size_t r = t + 1; r < proj.rows(); ++r) ws.add_free_row(proj.row_vec(r));
      for (size_t r = 0; r < free_part.rows(); ++r) ws.add_free_row(free_part.row_vec(r));
      ws.run(proj.row_vec(t));
      uint32_t found = ws.best();
      uint32_t prev = best.load();
      while (found < prev && !best.compare_exchange_weak(prev, found)) {
      }
    }
  };

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned nthreads = unsigned(std::min<size_t>(hw, tasks.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return best.load();
}

}  // namespace

uint32_t min_distance(const LinearCode& code, uint64_t budget, uint32_t known_lower_bound) {
  if (code.k() == 0) fail(Err::BadArgument, "zero code has no nonzero word");
  check_budget(code.ctx().field(), code.k(), budget);
  GfMatrix none(code.ctx().field(), 0, code.n());
  return projective_min_weight(code.ctx().field(), code.generators(), none, known_lower_bound);
}

uint32_t relative_distance(const NestedPair& pair, uint64_t budget, uint32_t known_lower_bound) {
  check_budget(pair.c1.ctx().field(), pair.c1.k(), budget);
  GfMatrix ext = coset_extension(pair.c1, pair.c2);
  if (ext.rows() != pair.ell) fail(Err::NotNested, "extension rank mismatch");
  return projective_min_weight(pair.c1.ctx().field(), ext, pair.c2.generators(),
                               known_lower_bound);
}

}  // namespace hermnest
