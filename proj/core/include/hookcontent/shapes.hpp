#pragma once

// Partitions, Young diagrams and the per-box statistics (hooks and the three
// content functions). Rows and columns are 1-indexed throughout, and parts
// beyond the length of a partition read as zero.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hookcontent {

struct Cell {
  int row = 1;
  int col = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Cell transpose(Cell c) noexcept { return {c.col, c.row}; }

class Partition {
 public:
  Partition() = default;

  /// Trailing zeros are dropped; throws NotWeaklyDecreasing otherwise.
  explicit Partition(std::vector<int> parts);

  /// Comma-separated decimal integers, e.g. "7,5,4,1". Empty text is the
  /// empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// λ_i for 1-based i; zero past the last part.
  int part(int i) const noexcept;
  /// λ^t_j: number of boxes in column j.
  int column_length(int j) const noexcept;

  bool contains(Cell c) const noexcept;
  /// Cells in row-major order.
  std::vector<Cell> cells() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition conjugate(const Partition& shape);

/// h(i,j) = λ_i + λ^t_j − i − j + 1.
int hook_length(const Partition& shape, Cell c);

/// c(i,j) = j − i.
constexpr int content_gl(Cell c) noexcept { return c.col - c.row; }

/// Symplectic content r_λ(i,j).
int content_sp(const Partition& shape, Cell c);

/// Orthogonal content r'_λ(i,j), shared by the odd and even cases.
int content_o(const Partition& shape, Cell c);

/// b(λ) = Σ (i−1) λ_i.
int b_stat(const Partition& shape);

/// Shifted exponents μ_i = λ_i + n − i, strictly decreasing, length n.
class MuVector {
 public:
  MuVector(const Partition& shape, int n);

  int n() const noexcept { return static_cast<int>(entries_.size()); }
  /// 1-based access.
  int operator[](int i) const noexcept { return entries_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> entries() const noexcept { return entries_; }

 private:
  std::vector<int> entries_;
};

MuVector mu_vector(const Partition& shape, int n);

/// Shape with the (1,1)-hook removed: (λ_2 − 1, …, λ_k − 1).
Partition remove_first_hook(const Partition& shape);

/// All partitions of r, in reverse lexicographic order.
std::vector<Partition> partitions_of(int r);

/// All partitions with at most max_size boxes, grouped by size.
std::vector<Partition> partitions_up_to(int max_size);

}  // namespace hookcontent
