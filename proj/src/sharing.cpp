#include "hermnest/sharing.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace hermnest {

DealerSpec::DealerSpec(NestedPair pair, RandomnessMode mode)
    : pair_(std::move(pair)), mode_(mode) {
  c2_basis_ = pair_.c2.generators();
  ext_ = coset_extension(pair_.c1, pair_.c2);
  if (ext_.rows() != pair_.ell) fail(Err::NotNested, "extension rank mismatch");
  if (stacked_basis().rank() != k2() + ell())
    fail(Err::NotNested, "stacked basis is not full rank");
}

std::string DealerSpec::scheme_id() const {
  // FNV-1a over the serialized basis matrices
  uint64_t h = 1469598103934665603ull;
  auto feed = [&](const GfMatrix& m) {
    for (size_t r = 0; r < m.rows(); ++r)
      for (size_t c = 0; c < m.cols(); ++c) {
        uint16_t v = m.at(r, c);
        for (int byte = 0; byte < 2; ++byte) {
          h ^= (v >> (8 * byte)) & 0xff;
          h *= 1099511628211ull;
        }
      }
  };
  feed(c2_basis_);
  feed(ext_);
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

void DealerSpec::serialize(std::ostream& os) const {
  os << "hermnest-scheme 1\n";
  os << "mode " << (mode_ == RandomnessMode::Seeded ? "seeded" : "external") << '\n';
  os << "construction " << (pair_.construction.empty() ? "-" : pair_.construction) << '\n';
  if (pair_.d_rel)
    os << "drel " << pair_.d_rel->value << ' ' << provenance_name(pair_.d_rel->prov) << '\n';
  if (pair_.d_rel_dual)
    os << "dreldual " << pair_.d_rel_dual->value << ' ' << provenance_name(pair_.d_rel_dual->prov)
       << '\n';
  os << "code1\n";
  pair_.c1.serialize(os);
  os << "code2\n";
  pair_.c2.serialize(os);
  os << "ext " << ext_.rows() << '\n';
  for (size_t r = 0; r < ext_.rows(); ++r) {
    for (size_t c = 0; c < ext_.cols(); ++c) os << (c ? " " : "") << ext_.at(r, c);
    os << '\n';
  }
}

DealerSpec DealerSpec::deserialize(std::istream& is) {
  std::string word;
  uint32_t version;
  if (!(is >> word >> version) || word != "hermnest-scheme" || version != 1)
    fail(Err::IoError, "not a hermnest scheme file");
  RandomnessMode mode = RandomnessMode::Seeded;
  std::string construction = "-";
  std::optional<DistanceValue> drel, dreldual;
  LinearCode c1, c2;
  bool have1 = false, have2 = false;
  GfMatrix ext;
  while (is >> word) {
    if (word == "mode") {
      std::string m;
      is >> m;
      mode = (m == "external") ? RandomnessMode::External : RandomnessMode::Seeded;
    } else if (word == "construction") {
      is >> construction;
    } else if (word == "drel" || word == "dreldual") {
      uint32_t v;
      std::string prov;
      is >> v >> prov;
      DistanceValue dv{v, prov == "bruteforce" ? Provenance::BruteForce
                                               : (prov == "padded" ? Provenance::Padded
                                                                   : Provenance::Formula)};
      (word == "drel" ? drel : dreldual) = dv;
    } else if (word == "code1") {
      c1 = LinearCode::deserialize(is);
      have1 = true;
    } else if (word == "code2") {
      c2 = LinearCode::deserialize(is);
      have2 = true;
    } else if (word == "ext") {
      size_t rows;
      is >> rows;
      if (!have1) fail(Err::IoError, "ext before code1");
      ext = GfMatrix(c1.ctx().field(), 0, c1.n());
      for (size_t r = 0; r < rows; ++r) {
        std::vector<uint16_t> row(c1.n());
        for (size_t c = 0; c < row.size(); ++c) {
          uint32_t v;
          if (!(is >> v)) fail(Err::IoError, "short ext row");
          row[c] = uint16_t(v);
        }
        ext.append_row(row);
      }
    } else {
      fail(Err::IoError, "unknown scheme field '" + word + "'");
    }
  }
  if (!have1 || !have2) fail(Err::IoError, "scheme file missing codes");
  NestedPair pair = make_pair(std::move(c1), std::move(c2));
  pair.construction = construction;
  pair.d_rel = drel;
  pair.d_rel_dual = dreldual;
  return DealerSpec(std::move(pair), mode);
}

void ShareBundle::serialize(std::ostream& os) const {
  for (const auto& [idx, val] : shares) os << idx << ':' << val << '\n';
}

ShareBundle ShareBundle::deserialize(std::istream& is, const std::string& scheme_id) {
  ShareBundle b;
  b.scheme_id = scheme_id;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) fail(Err::IoError, "share line lacks ':'");
    b.shares[uint32_t(std::stoul(line.substr(0, colon)))] =
        uint16_t(std::stoul(line.substr(colon + 1)));
  }
  return b;
}

namespace {

// rejection-sampled uniform draw; engine state advances identically everywhere
uint16_t uniform_element(std::mt19937_64& rng, uint32_t order) {
  const uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % order + 1) % order;
  for (;;) {
    uint64_t v = rng();
    if (v <= limit) return uint16_t(v % order);
  }
}

}  // namespace

ShareBundle deal(const DealerSpec& spec, const std::vector<uint16_t>& secret, uint64_t seed) {
  if (secret.size() != spec.ell())
    fail(Err::LengthMismatch, "secret has " + std::to_string(secret.size()) + " symbols, need " +
                                  std::to_string(spec.ell()));
  const Field& f = spec.pair().c1.ctx().field();
  std::mt19937_64 rng(seed);
  std::random_device rd;
  std::vector<uint16_t> coeffs(spec.k2());
  for (auto& a : coeffs)
    a = spec.mode() == RandomnessMode::Seeded
            ? uniform_element(rng, f.order())
            : uint16_t((uint64_t(rd()) << 32 | rd()) % f.order());
  std::vector<uint16_t> word(spec.n(), 0);
  for (uint32_t r = 0; r < spec.k2(); ++r)
    add_scaled_row(f, word.data(), spec.c2_basis().row(r), coeffs[r], spec.n());
  for (uint32_t r = 0; r < spec.ell(); ++r)
    add_scaled_row(f, word.data(), spec.extension().row(r), secret[r], spec.n());
  ShareBundle b;
  b.scheme_id = spec.scheme_id();
  for (uint32_t k = 0; k < spec.n(); ++k) b.shares[k + 1] = word[k];
  return b;
}

ReconstructResult reconstruct(const DealerSpec& spec, const ShareBundle& partial) {
  const Field& f = spec.pair().c1.ctx().field();
  const GfMatrix basis = spec.stacked_basis();
  const uint32_t k1 = spec.k2() + spec.ell();
  std::vector<uint32_t> cols;
  std::vector<uint16_t> vals;
  for (const auto& [idx, val] : partial.shares) {
    if (idx < 1 || idx > spec.n()) fail(Err::BadArgument, "share index out of range");
    if (val >= f.order()) fail(Err::BadArgument, "share value out of field");
    cols.push_back(idx - 1);
    vals.push_back(val);
  }
  // equations over the unknown coefficient vector, one per known coordinate
  GfMatrix sys(f, 0, k1 + 1);
  GfMatrix coefficient(f, 0, k1);
  for (size_t e = 0; e < cols.size(); ++e) {
    std::vector<uint16_t> row(k1 + 1);
    for (uint32_t r = 0; r < k1; ++r) row[r] = basis.at(r, cols[e]);
    row[k1] = vals[e];
    sys.append_row(row);
    row.pop_back();
    coefficient.append_row(row);
  }
  GfMatrix rr = sys.rref();
  for (size_t r = 0; r < rr.rows(); ++r) {
    bool zero_coeffs = true;
    for (uint32_t c = 0; c < k1 && zero_coeffs; ++c) zero_coeffs = rr.at(r, c) == 0;
    if (zero_coeffs && rr.at(r, k1) != 0)
      fail(Err::InconsistentShares, "shares are not a projection of any codeword");
  }
  // free directions that touch secret coordinates leave them undetermined
  GfMatrix kernel = coefficient.nullspace();
  ReconstructResult res;
  std::vector<bool> undet(spec.ell(), false);
  for (size_t r = 0; r < kernel.rows(); ++r)
    for (uint32_t j = 0; j < spec.ell(); ++j)
      if (kernel.at(r, spec.k2() + j) != 0) undet[j] = true;
  for (uint32_t j = 0; j < spec.ell(); ++j)
    if (undet[j]) res.undetermined_coordinates.push_back(j);
  if (!res.undetermined_coordinates.empty()) return res;

  // particular solution with free variables at zero
  std::vector<uint16_t> sol(k1, 0);
  for (size_t r = 0; r < rr.rows(); ++r) {
    uint32_t c = 0;
    while (c < k1 && rr.at(r, c) == 0) ++c;
    if (c < k1) sol[c] = rr.at(r, k1);
  }
  res.secret = std::vector<uint16_t>(sol.begin() + spec.k2(), sol.end());
  return res;
}

namespace {

// rank of the basis rows restricted to the columns in `sel`
uint32_t rank_on(const Field& f, const GfMatrix& rows, const std::vector<uint32_t>& sel) {
  GfMatrix m(f, 0, sel.size());
  for (size_t r = 0; r < rows.rows(); ++r) {
    std::vector<uint16_t> v(sel.size());
    for (size_t c = 0; c < sel.size(); ++c) v[c] = rows.at(r, sel[c]);
    m.append_row(v);
  }
  return uint32_t(m.rank());
}

template <typename Fn>
bool for_all_subsets(uint32_t n, uint32_t size, uint64_t& budget, Fn&& check) {
  std::vector<uint32_t> idx(size);
  for (uint32_t i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    if (budget-- == 0) fail(Err::BudgetExceeded, "subset audit exceeded its budget");
    if (!check(idx)) return false;
    // next combination
    int32_t pos = int32_t(size) - 1;
    while (pos >= 0 && idx[pos] == n - size + pos) --pos;
    if (pos < 0) return true;
    ++idx[pos];
    for (uint32_t k = pos + 1; k < size; ++k) idx[k] = idx[k - 1] + 1;
  }
}

}  // namespace

uint32_t exact_privacy_number(const DealerSpec& spec, uint64_t budget) {
  const Field& f = spec.pair().c1.ctx().field();
  const GfMatrix full = spec.stacked_basis();
  const GfMatrix& c2 = spec.c2_basis();
  uint32_t t = 0;
  for (uint32_t size = 1; size <= spec.n(); ++size) {
    bool all_private = for_all_subsets(spec.n(), size, budget, [&](const std::vector<uint32_t>& A) {
      return rank_on(f, full, A) == rank_on(f, c2, A);
    });
    if (!all_private) break;
    t = size;
  }
  return t;
}

uint32_t exact_reconstruction_number(const DealerSpec& spec, uint64_t budget) {
  const Field& f = spec.pair().c1.ctx().field();
  const GfMatrix full = spec.stacked_basis();
  const GfMatrix& c2 = spec.c2_basis();
  for (uint32_t size = 0; size <= spec.n(); ++size) {
    if (size < spec.ell()) continue;
    bool all_determine = for_all_subsets(spec.n(), size, budget, [&](const std::vector<uint32_t>& A) {
      return rank_on(f, full, A) == rank_on(f, c2, A) + spec.ell();
    });
    if (all_determine) return size;
  }
  return spec.n() + 1;  // unreachable for a valid pair
}

bool perfect_privacy_multiset_check(const DealerSpec& spec, const std::vector<uint32_t>& subset,
                                    uint64_t budget) {
  const Field& f = spec.pair().c1.ctx().field();
  const uint32_t order = f.order();
  long double space = 1;
  for (uint32_t r = 0; r < spec.k2(); ++r) space *= order;
  long double secrets = 1;
  for (uint32_t r = 0; r < spec.ell(); ++r) secrets *= order;
  if (space * secrets > (long double)budget)
    fail(Err::BudgetExceeded, "randomness space too large for the multiset check");

  auto tuple_key = [&](const std::vector<uint16_t>& word) {
    uint64_t key = 0;
    for (uint32_t c : subset) key = key * order + word[c - 1];
    return key;
  };
  std::vector<uint16_t> coeffs(spec.k2() + spec.ell(), 0);
  const GfMatrix basis = spec.stacked_basis();
  std::optional<std::vector<uint64_t>> reference;
  // odometer over secrets (outer) and randomness (inner)
  std::vector<uint16_t> secret(spec.ell(), 0);
  for (;;) {
    std::vector<uint64_t> hist;
    std::vector<uint16_t> rnd(spec.k2(), 0);
    for (;;) {
      std::vector<uint16_t> word(spec.n(), 0);
      for (uint32_t r = 0; r < spec.k2(); ++r)
        add_scaled_row(f, word.data(), basis.row(r), rnd[r], spec.n());
      for (uint32_t r = 0; r < spec.ell(); ++r)
        add_scaled_row(f, word.data(), basis.row(spec.k2() + r), secret[r], spec.n());
      hist.push_back(tuple_key(word));
      uint32_t p = 0;
      while (p < rnd.size() && rnd[p] == order - 1) rnd[p++] = 0;
      if (p == rnd.size()) break;
      ++rnd[p];
    }
    std::sort(hist.begin(), hist.end());
    if (!reference)
      reference = std::move(hist);
    else if (hist != *reference)
      return false;
    uint32_t p = 0;
    while (p < secret.size() && secret[p] == order - 1) secret[p++] = 0;
    if (p == secret.size()) break;
    ++secret[p];
  }
  return true;
}

}  // namespace hermnest
