#include "hermnest/semigroup.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "hermnest/curve.hpp"

namespace hermnest {

bool h_of_q_contains(uint32_t q, uint64_t x) {
  // x = c*q + r with 0 <= r < q lies in <q, q+1> iff c >= r
  return x / q >= x % q;
}

namespace {
uint32_t sigma_closed(uint32_t q, uint32_t i, uint32_t j) {
  uint32_t lam = i * q + j * (q + 1);
  if (i < q * q - q) return q * q * q - lam;
  return (q * q - i) * (q - j);
}
}  // namespace

Semigroup::Semigroup(uint32_t q) : q_(q), n_(q * q * q), genus_(q * (q - 1) / 2) {
  elements_.reserve(n_);
  for (uint32_t i = 0; i < q * q; ++i)
    for (uint32_t j = 0; j < q; ++j) {
      SemigroupElement e;
      e.lambda = i * q + j * (q + 1);
      e.i = i;
      e.j = j;
      e.sigma = sigma_closed(q, i, j);
      e.mu = sigma_closed(q, q * q - 1 - i, q - 1 - j);
      elements_.push_back(e);
    }
  std::sort(elements_.begin(), elements_.end(),
            [](const SemigroupElement& a, const SemigroupElement& b) { return a.lambda < b.lambda; });

  lambda_to_index_.assign(elements_.back().lambda + 1, -1);
  for (size_t k = 0; k < elements_.size(); ++k) lambda_to_index_[elements_[k].lambda] = int32_t(k);

  std::set<uint32_t> ach;
  for (const auto& e : elements_) ach.insert(e.sigma);
  achievable_.assign(ach.begin(), ach.end());
}

const Semigroup& Semigroup::get(uint32_t q) {
  if (!is_supported_q(q))
    fail(Err::UnsupportedQ, "q = " + std::to_string(q));
  static std::mutex mu;
  static std::map<uint32_t, std::unique_ptr<Semigroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;
  auto sg = std::unique_ptr<Semigroup>(new Semigroup(q));
  return *cache.emplace(q, std::move(sg)).first->second;
}

bool Semigroup::contains(int64_t lambda) const {
  return lambda >= 0 && lambda < int64_t(lambda_to_index_.size()) &&
         lambda_to_index_[size_t(lambda)] >= 0;
}

const SemigroupElement& Semigroup::at(uint64_t lambda) const {
  if (!contains(int64_t(lambda)))
    fail(Err::NotInHStar, std::to_string(lambda) + " (q = " + std::to_string(q_) + ")");
  return elements_[size_t(lambda_to_index_[size_t(lambda)])];
}

bool Semigroup::is_achievable(uint64_t delta) const {
  return std::binary_search(achievable_.begin(), achievable_.end(), uint32_t(delta)) &&
         delta <= n_;
}

std::optional<uint32_t> Semigroup::round_up_achievable(uint64_t delta) const {
  auto it = std::lower_bound(achievable_.begin(), achievable_.end(), delta);
  if (it == achievable_.end()) return std::nullopt;
  return *it;
}

uint32_t Semigroup::count_sigma_at_least(uint64_t delta) const {
  uint32_t c = 0;
  for (const auto& e : elements_) c += e.sigma >= delta;
  return c;
}

uint32_t Semigroup::count_mu_below(uint64_t delta) const {
  uint32_t c = 0;
  for (const auto& e : elements_) c += e.mu < delta;
  return c;
}

uint32_t Semigroup::count_lambda_at_most(int64_t lambda) const {
  if (lambda < 0) return 0;
  uint32_t c = 0;
  for (const auto& e : elements_) c += int64_t(e.lambda) <= lambda;
  return c;
}

uint32_t sigma_oracle(uint32_t q, uint64_t lambda) {
  const Semigroup& sg = Semigroup::get(q);
  if (!sg.contains(int64_t(lambda))) fail(Err::NotInHStar, std::to_string(lambda));
  uint32_t c = 0;
  for (const auto& e : sg.elements())
    if (e.lambda >= lambda && h_of_q_contains(q, e.lambda - lambda)) ++c;
  return c;
}

uint32_t mu_oracle(uint32_t q, uint64_t lambda) {
  uint32_t c = 0;
  for (uint64_t eta = 0; eta <= lambda; ++eta)
    if (h_of_q_contains(q, eta) && h_of_q_contains(q, lambda - eta)) ++c;
  return c;
}

namespace {

class LemmaCheck {
public:
  LemmaCheck(std::string name) { res_.name = std::move(name); res_.passed = true; }
  template <typename... Args>
  void expect(bool cond, Args... ctx) {
    ++res_.cases_checked;
    if (!cond && res_.passed) {
      res_.passed = false;
      std::ostringstream os;
      ((os << ctx << ' '), ...);
      res_.counterexample = os.str();
    }
  }
  LemmaResult take() { return std::move(res_); }

private:
  LemmaResult res_{};
};

}  // namespace

std::vector<LemmaResult> verify_appendix_lemmas(uint32_t q) {
  // All quantified statements are checked with the definitional oracles, not
  // the closed forms, so a formula bug cannot certify itself.
  const Semigroup& sg = Semigroup::get(q);
  const uint32_t n = q * q * q;
  auto sig = [&](uint32_t i, uint32_t j) { return sigma_oracle(q, uint64_t(i) * q + uint64_t(j) * (q + 1)); };
  auto muo = [&](uint32_t i, uint32_t j) { return mu_oracle(q, uint64_t(i) * q + uint64_t(j) * (q + 1)); };
  std::vector<LemmaResult> out;

  {
    LemmaCheck c("corstronger");
    for (const auto& e : sg.elements()) {
      int64_t s = sigma_oracle(q, e.lambda);
      c.expect(s >= int64_t(n) - e.lambda, "lambda", e.lambda);
      bool strict = s > int64_t(n) - e.lambda;
      bool cond = (q * q - q <= e.i && e.i < q * q) && (1 <= e.j && e.j < q);
      c.expect(strict == cond, "lambda", e.lambda, "strict", strict);
    }
    out.push_back(c.take());
  }
  {
    LemmaCheck c("lem1");
    for (uint32_t i = 1; i + 1 <= q * q - q; ++i)
      for (uint32_t j = 0; j + 1 < q; ++j)
        c.expect(sig(i, j) == sig(i - 1, j + 1) + 1, "i", i, "j", j);
    for (uint32_t i = 0; i + 1 <= q * q - q; ++i)
      c.expect(sig(i, q - 1) == sig(i + q, 0) + 1, "i", i);
    out.push_back(c.take());
  }
  {
    LemmaCheck c("sequence");
    std::vector<uint32_t> seq;
    for (uint32_t i = 0; i < q * q; ++i) seq.push_back(sig(i, 0));
    for (uint32_t j = 1; j < q; ++j) seq.push_back(sig(q * q - 1, j));
    for (size_t k = 0; k + 1 < seq.size(); ++k)
      c.expect(seq[k] > seq[k + 1], "position", k);
    out.push_back(c.take());
  }
  {
    LemmaCheck c("symmetricCorner");
    for (uint32_t s = 0; s + 1 < q; ++s)
      for (uint32_t t = 0; t + 1 < q; ++t)
        c.expect(sig(q * q - q + s, t) == sig(q * q - q + t, s), "s", s, "t", t);
    out.push_back(c.take());
  }
  {
    // Second part checked for 0 <= j <= q-1; the stated range 0 <= j <= q^2-1
    // would leave the pole order outside H*(Q), so it is read as a typo.
    LemmaCheck c("improvedCorner");
    for (uint32_t i = q * q - q; i < q * q; ++i)
      for (uint32_t s = 0; i - s >= q * q - q; ++s)
        c.expect(sig(i - s, s) >= sig(i, 0), "i", i, "s", s);
    for (uint32_t j = 0; j < q; ++j)
      for (uint32_t s = 0; j + s <= q - 1; ++s)
        c.expect(sig(q * q - 1 - s, j + s) >= sig(q * q - 1, j), "j", j, "s", s);
    out.push_back(c.take());
  }
  {
    LemmaCheck c("smallSigma");
    for (const auto& e : sg.elements())
      if (sigma_oracle(q, e.lambda) <= q)
        c.expect(q * q - q <= e.i && e.i < q * q, "lambda", e.lambda);
    out.push_back(c.take());
  }
  {
    LemmaCheck c("lem6");
    uint32_t target = n - (q * q - q - 1);
    for (const auto& e : sg.elements()) {
      bool window = (q <= e.i && e.i < q * q - q) ||
                    (q * q - q < e.i && e.i <= q * q - 1 && e.j == 0) ||
                    (e.i < q && e.j == q - 1);
      if (window)
        c.expect(mu_oracle(q, e.lambda) + sigma_oracle(q, e.lambda) == target, "lambda", e.lambda);
    }
    out.push_back(c.take());
  }
  return out;
}

}  // namespace hermnest
