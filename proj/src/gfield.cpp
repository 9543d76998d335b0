#include "hermnest/gfield.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace hermnest {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::OrderTooLarge: return "OrderTooLarge";
    case Err::NoBundledModulus: return "NoBundledModulus";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::NotASquareOrder: return "NotASquareOrder";
    case Err::UnsupportedQ: return "UnsupportedQ";
    case Err::NotInHStar: return "NotInHStar";
    case Err::NotNested: return "NotNested";
    case Err::ZeroCodimension: return "ZeroCodimension";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::DeltaOutOfRange: return "DeltaOutOfRange";
    case Err::NotAchievableDelta: return "NotAchievableDelta";
    case Err::InclusionViolated: return "InclusionViolated";
    case Err::BadIndices: return "BadIndices";
    case Err::ConstraintViolated: return "ConstraintViolated";
    case Err::ParityViolated: return "ParityViolated";
    case Err::ShrinkNotAllowed: return "ShrinkNotAllowed";
    case Err::NoFeasiblePair: return "NoFeasiblePair";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::InconsistentShares: return "InconsistentShares";
    case Err::IoError: return "IoError";
    case Err::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

struct ConwayEntry {
  uint32_t p, m;
  std::vector<uint32_t> coeffs;  // lowest degree first, monic
};

const std::vector<ConwayEntry>& conway_table() {
  static const std::vector<ConwayEntry> table = {
#include "conway_table.inc"
  };
  return table;
}

// base-p digit vector of an element index
std::vector<uint32_t> digits(uint32_t a, uint32_t p, uint32_t m) {
  std::vector<uint32_t> d(m);
  for (uint32_t k = 0; k < m; ++k) {
    d[k] = a % p;
    a /= p;
  }
  return d;
}

uint32_t undigits(const std::vector<uint32_t>& d, uint32_t p) {
  uint32_t v = 0;
  for (size_t k = d.size(); k-- > 0;) v = v * p + d[k];
  return v;
}

// exhaustive factor check: no monic divisor of degree 1..m/2
void check_irreducible(uint32_t p, uint32_t m, const std::vector<uint32_t>& mod) {
  auto rem_by = [&](std::vector<uint32_t> a, const std::vector<uint32_t>& b) {
    // both monic, coeffs low->high
    while (a.size() >= b.size()) {
      uint32_t c = a.back();
      if (c != 0) {
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k)
          a[shift + k] = (a[shift + k] + p - (c * b[k]) % p) % p;
      }
      a.pop_back();
    }
    return a;
  };
  for (uint32_t deg = 1; 2 * deg <= m; ++deg) {
    uint64_t count = 1;
    for (uint32_t k = 0; k < deg; ++k) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<uint32_t> div = digits(uint32_t(idx), p, deg);
      div.push_back(1);
      auto r = rem_by(mod, div);
      bool zero = true;
      for (uint32_t c : r)
        if (c) { zero = false; break; }
      if (zero) fail(Err::NoBundledModulus, "bundled modulus is reducible");
    }
  }
}

}  // namespace

Field::Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), order_(1), modulus_(std::move(modulus)) {
  for (uint32_t k = 0; k < m_; ++k) order_ *= p_;
  check_irreducible(p_, m_, modulus_);

  // multiply-by-x on digit vectors, reduced by the modulus
  auto mulx = [&](uint32_t a) {
    auto d = digits(a, p_, m_);
    uint32_t top = d[m_ - 1];
    for (size_t k = m_ - 1; k > 0; --k) d[k] = d[k - 1];
    d[0] = 0;
    if (top)
      for (uint32_t k = 0; k < m_; ++k)
        d[k] = (d[k] + p_ * top - (top * modulus_[k]) % p_) % p_;
    return undigits(d, p_);
  };

  antilog_.assign(order_ - 1, 0);
  log_.assign(order_, 0);
  uint32_t e = 1;
  for (uint32_t k = 0; k < order_ - 1; ++k) {
    antilog_[k] = uint16_t(e);
    log_[e] = uint16_t(k);
    e = mulx(e);
  }
  if (e != 1) fail(Err::NoBundledModulus, "bundled modulus is not primitive");

  neg_.assign(order_, 0);
  for (uint32_t a = 0; a < order_; ++a) {
    auto d = digits(a, p_, m_);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_[a] = uint16_t(undigits(d, p_));
  }
  if (p_ != 2) {
    add_.assign(size_t(order_) * order_, 0);
    for (uint32_t a = 0; a < order_; ++a) {
      auto da = digits(a, p_, m_);
      for (uint32_t b = 0; b < order_; ++b) {
        auto db = digits(b, p_, m_);
        std::vector<uint32_t> s(m_);
        for (uint32_t k = 0; k < m_; ++k) s[k] = (da[k] + db[k]) % p_;
        add_[size_t(a) * order_ + b] = uint16_t(undigits(s, p_));
      }
    }
  }
}

const Field& Field::get(uint32_t p, uint32_t m) {
  if (!is_prime(p)) fail(Err::NotPrime, "p = " + std::to_string(p));
  if (m == 0) fail(Err::BadArgument, "extension degree must be positive");
  long double ord = 1;
  for (uint32_t k = 0; k < m; ++k) ord *= p;
  if (ord > kMaxOrder)
    fail(Err::OrderTooLarge, std::to_string(p) + "^" + std::to_string(m) + " > 2^16");

  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  for (const auto& e : conway_table()) {
    if (e.p == p && e.m == m) {
      auto f = std::unique_ptr<Field>(new Field(p, m, e.coeffs));
      return *cache.emplace(key, std::move(f)).first->second;
    }
  }
  fail(Err::NoBundledModulus,
       "no bundled Conway polynomial for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
}

const Field& Field::subfield() const {
  if (!has_square_order()) fail(Err::NotASquareOrder, "field order is not a square");
  return Field::get(p_, m_ / 2);
}

uint16_t Field::embed_down(uint16_t a, const Field& sub) const {
  // Conway compatibility: the subfield generator is x^((q^2-1)/(q-1)).
  if (a == 0) return 0;
  uint32_t q = sub.order();
  uint32_t step = (order_ - 1) / (q - 1);
  uint32_t e = log_[a];
  if (e % step != 0) fail(Err::NotASquareOrder, "element is not in the subfield");
  return sub.antilog_[e / step];
}

uint16_t Field::norm_to_subfield(uint16_t a) const {
  const Field& sub = subfield();
  uint32_t q = sub.order();
  return embed_down(pow(a, q + 1), sub);
}

uint16_t Field::trace_to_subfield(uint16_t a) const {
  const Field& sub = subfield();
  uint32_t q = sub.order();
  return embed_down(add(pow(a, q), a), sub);
}

}  // namespace hermnest
