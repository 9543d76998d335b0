#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hermnest/curve.hpp"
#include "hermnest/gfmatrix.hpp"
#include "hermnest/semigroup.hpp"

namespace hermnest {

constexpr uint64_t kDefaultBudget = uint64_t(1) << 26;

enum class Provenance { Formula, BruteForce, Padded };
const char* provenance_name(Provenance p);

struct DistanceValue {
  uint32_t value = 0;
  Provenance prov = Provenance::Formula;
};

// A linear code over GF(q^2) given by independent generator rows. Codes built
// from monomial evaluations keep their pole-order set, which makes inclusion
// and dimension questions combinatorial instead of linear-algebraic.
class LinearCode {
public:
  LinearCode() = default;

  static LinearCode one_point(const CurveContext& ctx, int64_t lambda);
  static LinearCode improved_primary(const CurveContext& ctx, uint32_t delta);   // E~(delta)
  static LinearCode improved_dual_perp(const CurveContext& ctx, uint32_t delta); // span{mu < delta}
  static LinearCode raw(const CurveContext& ctx, const GfMatrix& rows, std::string descriptor);

  LinearCode dual() const;

  const CurveContext& ctx() const { return *ctx_; }
  uint32_t n() const { return uint32_t(gen_.cols()); }
  uint32_t k() const { return uint32_t(gen_.rows()); }
  const GfMatrix& generators() const { return gen_; }
  GfMatrix canonical() const { return gen_.rref(); }  // fixed-column-order rref
  const std::string& descriptor() const { return descriptor_; }
  // pole orders of the generating monomials, when the code is a monomial span
  const std::optional<std::vector<uint32_t>>& pole_orders() const { return lambdas_; }

  bool same_row_space(const LinearCode& other) const;
  bool contains_code(const LinearCode& other) const;  // row-space inclusion

  void serialize(std::ostream& os) const;  // "q n k descriptor" + k rows of indices
  static LinearCode deserialize(std::istream& is);

private:
  const CurveContext* ctx_ = nullptr;
  GfMatrix gen_;
  std::string descriptor_;
  std::optional<std::vector<uint32_t>> lambdas_;
};

// Verified inclusion C2 subset of C1 with codimension >= 1.
struct NestedPair {
  LinearCode c1, c2;
  uint32_t ell = 0;
  std::optional<DistanceValue> d_rel, d_rel_dual;
  std::string construction;  // e.g. "improved(12,2)", "lower(1,1)"
};

// throws NotNested / ZeroCodimension
NestedPair make_pair(LinearCode c1, LinearCode c2);

// Exact minimum Hamming weight by projective message enumeration (first
// nonzero message coordinate pinned to 1). `budget` caps |field|^k message
// vectors; `known_lower_bound` permits early exit at a certified optimum.
uint32_t min_distance(const LinearCode& code, uint64_t budget = kDefaultBudget,
                      uint32_t known_lower_bound = 0);

// Exact min weight over C1 \ C2 via a coset-extension basis of C1 over C2.
uint32_t relative_distance(const NestedPair& pair, uint64_t budget = kDefaultBudget,
                           uint32_t known_lower_bound = 0);

// rows of c1 extending a basis of c2 to one of c1, chosen in generator order
GfMatrix coset_extension(const LinearCode& c1, const LinearCode& c2);

}  // namespace hermnest
