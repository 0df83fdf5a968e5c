#pragma once

// Exact Laurent polynomials in one variable q with arbitrary-precision
// integer coefficients, plus the bracket families ⟨i⟩ = q^i − q^−i and
// [i] = q^i − 1 that every specialisation formula is built from.

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hookcontent {

using BigInt = boost::multiprecision::cpp_int;

/// Canonical form: the coefficient vector never begins or ends with a zero,
/// and the zero polynomial has an empty vector and low exponent 0. Two equal
/// polynomials therefore compare equal member-wise.
class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(int constant) : LaurentPoly(BigInt(constant)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const BigInt& constant);                           // NOLINT(google-explicit-constructor)
  /// Sums repeated exponents; zero coefficients are discarded.
  LaurentPoly(std::initializer_list<Term> terms);
  explicit LaurentPoly(const std::vector<Term>& terms);

  static LaurentPoly monomial(int exponent, const BigInt& coeff = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest and highest exponents carrying a nonzero coefficient. Zero
  /// polynomial reports (0, -1).
  int min_exponent() const noexcept { return low_; }
  int max_exponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  BigInt coefficient(int exponent) const;
  /// Nonzero terms, exponent ascending.
  std::vector<Term> terms() const;
  std::size_t term_count() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned exponent) const;
  /// q ↦ q^−1.
  LaurentPoly substitute_inverse() const;
  /// Sum of coefficients.
  BigInt eval_at_one() const;

  /// Plain rendering, e.g. "q^-4 + 2*q^-2 + 1 - q".
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// The unique c with c * den == num. Throws InexactDivision when den does
/// not divide num in Z[q, q^-1], and for den == 0.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// ⟨i⟩ = q^i − q^−i for i ≥ 1, and the constant 1 for i = 0.
LaurentPoly angle_bracket(int i);
/// ⟨i⟩! = ⟨1⟩⟨2⟩⋯⟨i⟩, with ⟨0⟩! = 1.
LaurentPoly angle_factorial(int i);
/// [i] = q^i − 1.
LaurentPoly square_bracket(int i);

/// Product of a sequence of polynomials, multiplied pairwise.
LaurentPoly product(std::vector<LaurentPoly> factors);

}  // namespace hookcontent
