#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermnest/errors.hpp"

namespace hermnest {

// One element of H*(Q) with its box decomposition and order-bound values.
struct SemigroupElement {
  uint32_t lambda;
  uint32_t i;      // lambda = i*q + j*(q+1), 0 <= i <= q^2-1
  uint32_t j;      // 0 <= j <= q-1
  uint32_t sigma;  // closed form, Prop-verified against the oracle by the suites
  uint32_t mu;
};

// true iff x is in H(Q) = <q, q+1>
bool h_of_q_contains(uint32_t q, uint64_t x);

// The numerical-semigroup layer for one q, eagerly tabulated (q^3 entries).
class Semigroup {
public:
  static const Semigroup& get(uint32_t q);  // cached; throws UnsupportedQ

  uint32_t q() const { return q_; }
  uint32_t n() const { return n_; }
  uint32_t genus() const { return genus_; }
  const std::vector<SemigroupElement>& elements() const { return elements_; }  // ascending lambda

  const SemigroupElement& at(uint64_t lambda) const;  // throws NotInHStar
  bool contains(int64_t lambda) const;

  uint32_t sigma_formula(uint64_t lambda) const { return at(lambda).sigma; }
  uint32_t mu_formula(uint64_t lambda) const { return at(lambda).mu; }

  // designed distances realizable as sigma values (equals the mu value set)
  const std::vector<uint32_t>& achievable() const { return achievable_; }
  bool is_achievable(uint64_t delta) const;
  // smallest achievable value >= delta; nullopt when delta exceeds them all
  std::optional<uint32_t> round_up_achievable(uint64_t delta) const;

  uint32_t count_sigma_at_least(uint64_t delta) const;  // dim E~(delta)
  uint32_t count_mu_below(uint64_t delta) const;        // dim of the C~(delta)-perp span
  uint32_t count_lambda_at_most(int64_t lambda) const;  // dim C_L(D, lambda Q)

private:
  explicit Semigroup(uint32_t q);
  uint32_t q_, n_, genus_;
  std::vector<SemigroupElement> elements_;
  std::vector<uint32_t> achievable_;
  std::vector<int32_t> lambda_to_index_;
};

// Definitional counts, kept deliberately independent of the closed forms above.
uint32_t sigma_oracle(uint32_t q, uint64_t lambda);  // throws NotInHStar
uint32_t mu_oracle(uint32_t q, uint64_t lambda);

// Exhaustive check of the appendix lemmas over their quantifier ranges.
struct LemmaResult {
  std::string name;
  bool passed;
  uint64_t cases_checked;
  std::string counterexample;  // empty when passed
};
std::vector<LemmaResult> verify_appendix_lemmas(uint32_t q);

}  // namespace hermnest
