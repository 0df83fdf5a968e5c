#pragma once

#include <vector>

#include "hookcontent/laurent.hpp"

namespace hookcontent {

/// Square matrix of Laurent polynomials, row-major.
class PolyMatrix {
 public:
  explicit PolyMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  int size() const noexcept { return n_; }
  /// 0-based indexing.
  LaurentPoly& operator()(int row, int col) { return cells_[index(row, col)]; }
  const LaurentPoly& operator()(int row, int col) const { return cells_[index(row, col)]; }

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col);
  }

  int n_;
  std::vector<LaurentPoly> cells_;
};

/// Laplace expansion along the first row.
LaurentPoly determinant_cofactor(const PolyMatrix& m);

/// Fraction-free (Bareiss) elimination; every division is exact.
LaurentPoly determinant_bareiss(PolyMatrix m);

/// Cofactor expansion up to 4x4, Bareiss above.
LaurentPoly determinant(const PolyMatrix& m);

}  // namespace hookcontent
