#include "hermnest/curve.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace hermnest {

namespace {
constexpr std::array<uint32_t, 10> kSupportedQ = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

std::pair<uint32_t, uint32_t> prime_power(uint32_t q) {
  for (uint32_t p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    uint32_t m = 0, v = 1;
    while (v < q) v *= p, ++m;
    if (v == q) return {p, m};
  }
  fail(Err::UnsupportedQ, std::to_string(q) + " is not a prime power");
}
}  // namespace

bool is_supported_q(uint32_t q) {
  for (uint32_t s : kSupportedQ)
    if (s == q) return true;
  return false;
}

CurveContext::CurveContext(uint32_t q) : q_(q), n_(q * q * q), genus_(q * (q - 1) / 2) {
  auto [p, m] = prime_power(q);
  field_ = &Field::get(p, 2 * m);
  const Field& F = *field_;
  places_.reserve(n_);
  for (uint32_t x = 0; x < F.order(); ++x) {
    uint16_t lhs = F.pow(uint16_t(x), q + 1);
    for (uint32_t y = 0; y < F.order(); ++y) {
      if (lhs == F.add(F.pow(uint16_t(y), q), uint16_t(y)))
        places_.emplace_back(uint16_t(x), uint16_t(y));
    }
  }
  if (places_.size() != n_)
    fail(Err::UnsupportedQ, "place enumeration did not yield q^3 points");
}

const CurveContext& CurveContext::get(uint32_t q) {
  if (!is_supported_q(q))
    fail(Err::UnsupportedQ, "q = " + std::to_string(q) + " (supported: 2,3,4,5,7,8,9,11,13,16)");
  static std::mutex mu;
  static std::map<uint32_t, std::unique_ptr<CurveContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;
  auto ctx = std::unique_ptr<CurveContext>(new CurveContext(q));
  return *cache.emplace(q, std::move(ctx)).first->second;
}

bool CurveContext::in_h_star(int64_t lambda) const {
  if (lambda < 0) return false;
  uint64_t b = uint64_t(lambda) % q_;
  int64_t a = (lambda - int64_t(b) * (q_ + 1)) / int64_t(q_);
  return a >= 0 && a <= int64_t(q_) * q_ - 1;
}

MonomialFunction CurveContext::monomial_for(uint64_t lambda) const {
  uint32_t b = uint32_t(lambda % q_);
  int64_t a = (int64_t(lambda) - int64_t(b) * (q_ + 1)) / int64_t(q_);
  if (a < 0 || a > int64_t(q_) * q_ - 1)
    fail(Err::NotInHStar, std::to_string(lambda));
  return {uint32_t(a), b};
}

std::vector<uint16_t> CurveContext::evaluate(const MonomialFunction& f) const {
  const Field& F = *field_;
  std::vector<uint16_t> v(n_);
  for (uint32_t k = 0; k < n_; ++k) {
    auto [x, y] = places_[k];
    v[k] = F.mul(F.pow(x, f.a), F.pow(y, f.b));
  }
  return v;
}

}  // namespace hermnest
