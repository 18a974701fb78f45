#pragma once

// Dense exact linear algebra over the rationals.

#include <optional>
#include <vector>

#include "gtutte/rational.hpp"

namespace gtutte {

using RatVector = std::vector<Rat>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector column(std::size_t j) const;
  RatMatrix transpose() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& v);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Pivots are taken column by column, using the
/// first row (top to bottom) with a nonzero entry.
RowEchelon rref(RatMatrix a);

std::size_t rank(const RatMatrix& a);

/// Basis of the right kernel: one vector per free column f, with a 1 at f,
/// zeros at the other free columns and -R(i,f) at the i-th pivot column.
std::vector<RatVector> nullspace(const RatMatrix& a);

std::optional<RatMatrix> inverse(const RatMatrix& a);

bool is_zero(const RatVector& v);

}  // namespace gtutte
