#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermnest/codes.hpp"

namespace hermnest {

enum class RandomnessMode { Seeded, External };

// Coset dealer data: a basis of C2 extended to a basis of C1, the extension
// rows carrying the secret coordinates (in generator order, so each secret
// symbol is attached to a specific pole order).
class DealerSpec {
public:
  explicit DealerSpec(NestedPair pair, RandomnessMode mode = RandomnessMode::Seeded);

  const NestedPair& pair() const { return pair_; }
  const GfMatrix& c2_basis() const { return c2_basis_; }
  const GfMatrix& extension() const { return ext_; }
  GfMatrix stacked_basis() const { return c2_basis_.stacked(ext_); }
  uint32_t n() const { return pair_.c1.n(); }
  uint32_t k2() const { return uint32_t(c2_basis_.rows()); }
  uint32_t ell() const { return pair_.ell; }
  RandomnessMode mode() const { return mode_; }
  std::string scheme_id() const;  // hash of the basis matrices

  void serialize(std::ostream& os) const;
  static DealerSpec deserialize(std::istream& is);

private:
  NestedPair pair_;
  GfMatrix c2_basis_, ext_;
  RandomnessMode mode_;
};

struct ShareBundle {
  std::map<uint32_t, uint16_t> shares;  // participant index (1..n) -> element
  std::string scheme_id;

  void serialize(std::ostream& os) const;  // "index:element" per line
  static ShareBundle deserialize(std::istream& is, const std::string& scheme_id);
};

// draws the k2 random coefficients from the seeded generator (Seeded mode) or
// the OS entropy source (External mode); throws LengthMismatch
ShareBundle deal(const DealerSpec& spec, const std::vector<uint16_t>& secret, uint64_t seed);

struct ReconstructResult {
  std::optional<std::vector<uint16_t>> secret;       // set when uniquely determined
  std::vector<uint32_t> undetermined_coordinates;    // secret positions still free
};

// Solves the linear system on the known coordinates. Throws InconsistentShares
// when the shares are not a C1 projection (corruption signal).
ReconstructResult reconstruct(const DealerSpec& spec, const ShareBundle& partial);

// Exact privacy and reconstruction numbers by full subset-rank enumeration:
// t is the largest size where every subset leaks nothing, r the smallest size
// where every subset determines the secret. `budget` caps the number of rank
// evaluations (BudgetExceeded beyond it).
uint32_t exact_privacy_number(const DealerSpec& spec, uint64_t budget = kDefaultBudget);
uint32_t exact_reconstruction_number(const DealerSpec& spec, uint64_t budget = kDefaultBudget);

// True iff the multiset of share tuples on `subset` is the same for every
// secret, the randomness ranging over its whole space (enumerable only for
// small k2; BudgetExceeded otherwise).
bool perfect_privacy_multiset_check(const DealerSpec& spec, const std::vector<uint32_t>& subset,
                                    uint64_t budget = kDefaultBudget);

}  // namespace hermnest
