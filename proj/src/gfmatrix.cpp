#include "hermnest/gfmatrix.hpp"

#include <cassert>

namespace hermnest {

void GfMatrix::append_row(const std::vector<uint16_t>& v) {
  assert(v.size() == cols_ || rows_ == 0);
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

GfMatrix GfMatrix::rref() const {
  GfMatrix m = *this;
  const Field& f = *field_;
  size_t piv = 0;
  for (size_t col = 0; col < cols_ && piv < m.rows_; ++col) {
    size_t sel = piv;
    while (sel < m.rows_ && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows_) continue;
    if (sel != piv)
      for (size_t c = 0; c < cols_; ++c) std::swap(m.at(piv, c), m.at(sel, c));
    uint16_t iv = f.inv(m.at(piv, col));
    if (iv != 1)
      for (size_t c = col; c < cols_; ++c) m.at(piv, c) = f.mul(iv, m.at(piv, c));
    for (size_t r = 0; r < m.rows_; ++r) {
      if (r == piv) continue;
      uint16_t c0 = m.at(r, col);
      if (c0 == 0) continue;
      uint16_t nc0 = f.neg(c0);
      add_scaled_row(f, m.row(r), m.row(piv), nc0, cols_);
    }
    ++piv;
  }
  GfMatrix out(f, 0, cols_);
  for (size_t r = 0; r < piv; ++r) out.append_row(m.row_vec(r));
  return out;
}

std::vector<size_t> GfMatrix::pivot_columns() const {
  GfMatrix r = rref();
  std::vector<size_t> piv;
  for (size_t i = 0; i < r.rows(); ++i) {
    size_t c = 0;
    while (c < cols_ && r.at(i, c) == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

GfMatrix GfMatrix::nullspace() const {
  const Field& f = *field_;
  GfMatrix r = rref();
  std::vector<size_t> piv;
  std::vector<bool> is_piv(cols_, false);
  for (size_t i = 0; i < r.rows(); ++i) {
    size_t c = 0;
    while (c < cols_ && r.at(i, c) == 0) ++c;
    piv.push_back(c);
    is_piv[c] = true;
  }
  GfMatrix out(f, 0, cols_);
  for (size_t free = 0; free < cols_; ++free) {
    if (is_piv[free]) continue;
    std::vector<uint16_t> v(cols_, 0);
    v[free] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r.at(i, free));
    out.append_row(v);
  }
  return out.rref();
}

GfMatrix GfMatrix::stacked(const GfMatrix& other) const {
  GfMatrix out = *this;
  for (size_t r = 0; r < other.rows(); ++r) out.append_row(other.row_vec(r));
  return out;
}

std::vector<uint16_t> GfMatrix::reduce(std::vector<uint16_t> v) const {
  const Field& f = *field_;
  for (size_t i = 0; i < rows_; ++i) {
    size_t c = 0;
    while (c < cols_ && at(i, c) == 0) ++c;
    if (c < cols_ && v[c] != 0) add_scaled_row(f, v.data(), row(i), f.neg(v[c]), cols_);
  }
  return v;
}

bool GfMatrix::contains(const std::vector<uint16_t>& v) const {
  auto r = reduce(v);
  for (uint16_t x : r)
    if (x) return false;
  return true;
}

void add_scaled_row(const Field& f, uint16_t* acc, const uint16_t* row, uint16_t s, size_t n) {
  if (s == 0) return;
  if (f.is_binary()) {
    if (s == 1) {
      for (size_t k = 0; k < n; ++k) acc[k] ^= row[k];
    } else {
      for (size_t k = 0; k < n; ++k) acc[k] ^= f.mul(s, row[k]);
    }
    return;
  }
  for (size_t k = 0; k < n; ++k) acc[k] = f.add(acc[k], f.mul(s, row[k]));
}

}  // namespace hermnest
