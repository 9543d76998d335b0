#pragma once

#include <cstdint>
#include <vector>

#include "hermnest/gfield.hpp"

namespace hermnest {

// x^a y^b with pole order a*q + b*(q+1) at the place at infinity.
struct MonomialFunction {
  uint32_t a = 0;  // 0 <= a <= q^2-1
  uint32_t b = 0;  // 0 <= b <= q-1
  uint64_t pole_order(uint32_t q) const { return uint64_t(a) * q + uint64_t(b) * (q + 1); }
};

// The affine rational places of x^(q+1) = y^q + y over GF(q^2), in a fixed
// order (lexicographic by element index of x, then y), together with the
// curve constants every code construction needs.
class CurveContext {
public:
  static const CurveContext& get(uint32_t q);  // cached; throws UnsupportedQ

  uint32_t q() const { return q_; }
  uint32_t n() const { return n_; }
  uint32_t genus() const { return genus_; }
  const Field& field() const { return *field_; }
  const std::vector<std::pair<uint16_t, uint16_t>>& places() const { return places_; }

  // unique (a,b) with lambda = a*q + b*(q+1); throws NotInHStar
  MonomialFunction monomial_for(uint64_t lambda) const;
  bool in_h_star(int64_t lambda) const;

  // component k is x_k^a * y_k^b in place order
  std::vector<uint16_t> evaluate(const MonomialFunction& f) const;

  CurveContext(const CurveContext&) = delete;
  CurveContext& operator=(const CurveContext&) = delete;

private:
  explicit CurveContext(uint32_t q);

  uint32_t q_, n_, genus_;
  const Field* field_;
  std::vector<std::pair<uint16_t, uint16_t>> places_;
};

bool is_supported_q(uint32_t q);

}  // namespace hermnest
