#pragma once

#include <cstdint>
#include <vector>

#include "hermnest/errors.hpp"

namespace hermnest {

// Exact arithmetic in GF(p^m). Elements are indices in [0, p^m): the integer
// whose base-p digits are the polynomial-basis coefficients, lowest degree
// first. The modulus is the Conway polynomial for (p, m), so a given element
// index means the same field element on every platform and in every run.
//
// Multiplication runs on log/antilog tables over the generator x; addition on
// a full table for odd p (xor for p = 2). Instances are immutable after
// construction and safe to share across threads.
class Field {
public:
  static constexpr uint32_t kMaxOrder = 1u << 16;

  // Cached lookup; builds the field on first use. Throws NotPrime,
  // OrderTooLarge or NoBundledModulus.
  static const Field& get(uint32_t p, uint32_t m);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return m_; }
  uint32_t order() const { return order_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint16_t add(uint16_t a, uint16_t b) const {
    return p_ == 2 ? static_cast<uint16_t>(a ^ b) : add_[size_t(a) * order_ + b];
  }
  uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }
  uint16_t neg(uint16_t a) const { return p_ == 2 ? a : neg_[a]; }
  uint16_t mul(uint16_t a, uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    return antilog_[(uint32_t(log_[a]) + log_[b]) % (order_ - 1)];
  }
  uint16_t inv(uint16_t a) const {
    if (a == 0) fail(Err::DivisionByZero, "inverse of zero");
    return antilog_[(order_ - 1 - log_[a]) % (order_ - 1)];
  }
  uint16_t pow(uint16_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return antilog_[uint32_t((uint64_t(log_[a]) * (e % (order_ - 1))) % (order_ - 1))];
  }
  // the multiplicative generator x
  uint16_t generator() const { return p_; }

  // Subfield transfer for fields of square order q^2: norm a^(q+1) and trace
  // a^q + a, both returned as elements of GF(q). Throws NotASquareOrder.
  uint16_t norm_to_subfield(uint16_t a) const;
  uint16_t trace_to_subfield(uint16_t a) const;
  const Field& subfield() const;
  bool has_square_order() const { return m_ % 2 == 0; }

  // raw tables for hot loops
  const uint16_t* add_row(uint16_t a) const { return &add_[size_t(a) * order_]; }
  bool is_binary() const { return p_ == 2; }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

private:
  Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);
  uint16_t embed_down(uint16_t a, const Field& sub) const;

  uint32_t p_, m_, order_;
  std::vector<uint32_t> modulus_;
  std::vector<uint16_t> antilog_, log_, add_, neg_;
};

// One field element with its owning field; mixing fields throws FieldMismatch.
struct FieldElement {
  const Field* field = nullptr;
  uint16_t index = 0;

  FieldElement() = default;
  FieldElement(const Field& f, uint16_t idx) : field(&f), index(idx) {}

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    check_same(a, b);
    return {*a.field, a.field->add(a.index, b.index)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    check_same(a, b);
    return {*a.field, a.field->sub(a.index, b.index)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    check_same(a, b);
    return {*a.field, a.field->mul(a.index, b.index)};
  }
  FieldElement operator-() const { return {*field, field->neg(index)}; }
  FieldElement inverse() const { return {*field, field->inv(index)}; }
  FieldElement pow(uint64_t e) const { return {*field, field->pow(index, e)}; }
  friend bool operator==(FieldElement a, FieldElement b) {
    return a.field == b.field && a.index == b.index;
  }

  static void check_same(FieldElement a, FieldElement b) {
    if (a.field != b.field) fail(Err::FieldMismatch, "elements from different fields");
  }
};

bool is_prime(uint32_t n);

}  // namespace hermnest
