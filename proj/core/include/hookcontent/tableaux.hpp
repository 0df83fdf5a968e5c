#pragma once

// Alphabets, tableau representation, the admissibility predicates for the
// GL / symplectic / orthogonal families, a pruned backtracking enumerator
// and the statistics feeding the generating functions.

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hookcontent/family.hpp"
#include "hookcontent/shapes.hpp"

namespace hookcontent {

/// Element of 1 < 1̄ < 2 < 2̄ < … < n < n̄ < ∞, encoded by rank: k ↦ 2k−1,
/// k̄ ↦ 2k, ∞ ↦ 2n+1. Whether rank 2n+1 means ∞ depends on n, so the
/// n-aware accessors take it explicitly.
class Symbol {
 public:
  constexpr explicit Symbol(int rank = 1) noexcept : rank_(rank) {}

  static constexpr Symbol unbarred(int k) noexcept { return Symbol(2 * k - 1); }
  static constexpr Symbol barred(int k) noexcept { return Symbol(2 * k); }
  static constexpr Symbol infinity(int n) noexcept { return Symbol(2 * n + 1); }

  constexpr int rank() const noexcept { return rank_; }
  /// k for both k and k̄.
  constexpr int index() const noexcept { return (rank_ + 1) / 2; }
  constexpr bool is_barred() const noexcept { return rank_ % 2 == 0; }
  constexpr bool is_infinity(int n) const noexcept { return rank_ == 2 * n + 1; }

  /// +k for k, −k for k̄, 0 for ∞.
  constexpr int value(int n) const noexcept {
    if (is_infinity(n)) return 0;
    return is_barred() ? -index() : index();
  }

  /// "k", "k~" or "inf".
  std::string render(int n) const;

  friend constexpr bool operator==(Symbol, Symbol) noexcept = default;
  friend constexpr auto operator<=>(Symbol, Symbol) noexcept = default;

 private:
  int rank_;
};

/// Symbols available to a family, ascending.
std::vector<Symbol> alphabet(Family family, int n);

class Tableau {
 public:
  /// Entries in row-major order. Does not check admissibility.
  Tableau(Partition shape, Family family, int n, std::vector<Symbol> entries);

  const Partition& shape() const noexcept { return shape_; }
  Family family() const noexcept { return family_; }
  int n() const noexcept { return n_; }
  const std::vector<Symbol>& entries() const noexcept { return entries_; }

  /// 1-based cell access; the cell must lie in the diagram.
  Symbol at(Cell c) const { return entries_[offset(c)]; }
  Symbol at(int row, int col) const { return at(Cell{row, col}); }

  /// Rows separated by '/', entries within a row by ','; e.g. "1/2~".
  std::string render() const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.family_ == b.family_ && a.n_ == b.n_ && a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  friend class TableauEnumerator;

  std::size_t offset(Cell c) const {
    return static_cast<std::size_t>(row_start_[static_cast<std::size_t>(c.row - 1)] + c.col - 1);
  }

  Partition shape_;
  Family family_;
  int n_;
  std::vector<int> row_start_;
  std::vector<Symbol> entries_;
};

/// Inverse of Tableau::render. Throws BadSymbol on malformed text or a row
/// structure that is not a partition.
Tableau parse_tableau(std::string_view text, Family family, int n);

bool is_semistandard(const Tableau& t);

/// Row i holds only entries ≥ i.
bool is_symplectic(const Tableau& t);

/// The first-two-column conditions on α_i, β_i for 1 ≤ i ≤ n. Whether ∞ is
/// allowed is a matter of alphabet, not of this predicate.
bool is_orthogonal(const Tableau& t);

/// Every entry in the family alphabet, semistandard, and the family's
/// extra condition holds.
bool is_admissible(const Tableau& t);

/// Visits every admissible tableau exactly once, in lexicographic order of
/// the row-major rank sequence. The reference is only valid during the
/// call. Throws TooFewRows when n < length(λ) (or n < 1), UnsupportedFamily
/// for so_even.
void for_each_tableau(Family family, const Partition& shape, int n,
                      const std::function<void(const Tableau&)>& visit);

std::vector<Tableau> enumerate(Family family, const Partition& shape, int n);
std::size_t count_tableaux(Family family, const Partition& shape, int n);

struct Stats {
  int entry_sum = 0;  // |T| with k̄ counted as −k and ∞ as 0
  int r_plus = 0;     // boxes holding an unbarred symbol
  int r_minus = 0;    // boxes holding a barred symbol
  int infinities = 0;
  int r = 0;          // r_plus − r_minus
  std::vector<int> weight;  // a_i(T) − a_ī(T), i = 1..n
};

Stats stats(const Tableau& t);

enum class EvenClass { positive, negative, both, neither };

std::string_view even_class_name(EvenClass c) noexcept;

constexpr bool counts_as_positive(EvenClass c) noexcept {
  return c == EvenClass::positive || c == EvenClass::both;
}
constexpr bool counts_as_negative(EvenClass c) noexcept {
  return c == EvenClass::negative || c == EvenClass::both;
}

/// Positive/negative split of even orthogonal tableaux whose shape has
/// exactly n parts, read off the first entry of each row. Throws
/// ShapeNotFull otherwise.
EvenClass classify_even(const Tableau& t);

}  // namespace hookcontent
