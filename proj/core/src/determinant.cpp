#include "hookcontent/determinant.hpp"

#include <stdexcept>
#include <utility>

namespace hookcontent {

namespace {

constexpr int kCofactorLimit = 4;

LaurentPoly cofactor_rec(const PolyMatrix& m, std::vector<int>& cols, int row) {
  const int n = m.size();
  if (row == n) return LaurentPoly(1);
  LaurentPoly sum;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const int col = cols[k];
    if (!m(row, col).is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      LaurentPoly minor = cofactor_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
      LaurentPoly term = m(row, col) * minor;
      if (sign > 0) sum += term;
      else sum -= term;
    }
    sign = -sign;
  }
  return sum;
}

}  // namespace

LaurentPoly determinant_cofactor(const PolyMatrix& m) {
  if (m.size() < 1) throw std::invalid_argument("determinant of an empty matrix");
  std::vector<int> cols(static_cast<std::size_t>(m.size()));
  for (int c = 0; c < m.size(); ++c) cols[static_cast<std::size_t>(c)] = c;
  return cofactor_rec(m, cols, 0);
}

LaurentPoly determinant_bareiss(PolyMatrix m) {
  const int n = m.size();
  if (n < 1) throw std::invalid_argument("determinant of an empty matrix");
  bool negate = false;
  LaurentPoly prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return {};
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  LaurentPoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

LaurentPoly determinant(const PolyMatrix& m) {
  return m.size() <= kCofactorLimit ? determinant_cofactor(m) : determinant_bareiss(m);
}

}  // namespace hookcontent
