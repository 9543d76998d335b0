#pragma once

#include <cstdint>
#include <vector>

#include "hermnest/gfield.hpp"

namespace hermnest {

// Dense row-major matrix over a Field; element indices as entries.
class GfMatrix {
public:
  GfMatrix() = default;
  GfMatrix(const Field& f, size_t rows, size_t cols)
      : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  const Field& field() const { return *field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint16_t at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  uint16_t& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const uint16_t* row(size_t r) const { return &data_[r * cols_]; }
  uint16_t* row(size_t r) { return &data_[r * cols_]; }

  void append_row(const std::vector<uint16_t>& v);
  std::vector<uint16_t> row_vec(size_t r) const {
    return {row(r), row(r) + cols_};
  }

  // Reduced row echelon form with zero rows dropped; pivot columns ascending.
  // Canonical for the row space, so equality of rref()s is row-space equality.
  GfMatrix rref() const;
  size_t rank() const { return rref().rows(); }
  GfMatrix nullspace() const;  // basis of the right null space, in rref form
  GfMatrix stacked(const GfMatrix& other) const;

  // reduce v by this matrix (must be in rref); returns the residue
  std::vector<uint16_t> reduce(std::vector<uint16_t> v) const;
  bool contains(const std::vector<uint16_t>& v) const;

  friend bool operator==(const GfMatrix& a, const GfMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

  std::vector<size_t> pivot_columns() const;  // of the rref

private:
  const Field* field_ = nullptr;
  size_t rows_ = 0, cols_ = 0;
  std::vector<uint16_t> data_;
};

// c += s * row over the given field, and return the weight delta.
void add_scaled_row(const Field& f, uint16_t* acc, const uint16_t* row, uint16_t s, size_t n);

}  // namespace hermnest
