#include "hookcontent/shapes.hpp"

#include <charconv>
#include <numeric>

#include "hookcontent/errors.hpp"

namespace hookcontent {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw Error(Errc::not_an_integer, "negative part " + std::to_string(parts_[i]));
    }
    if (parts_[i] == 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
      throw Error(Errc::not_weakly_decreasing, to_string());
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return Partition{};
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                              : comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || value < 0) {
      throw Error(Errc::not_an_integer, "'" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  // Zeros are only legal as a trailing run.
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (int p : parts) {
    if (p == 0) throw Error(Errc::not_weakly_decreasing, std::string(text));
  }
  return Partition(std::move(parts));
}

int Partition::part(int i) const noexcept {
  return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::column_length(int j) const noexcept {
  if (j < 1) return 0;
  int count = 0;
  for (int p : parts_) {
    if (p < j) break;
    ++count;
  }
  return count;
}

bool Partition::contains(Cell c) const noexcept {
  return c.row >= 1 && c.row <= length() && c.col >= 1 && c.col <= part(c.row);
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= length(); ++i) {
    for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
  }
  return out;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition conjugate(const Partition& shape) {
  std::vector<int> cols;
  for (int j = 1; j <= shape.part(1); ++j) cols.push_back(shape.column_length(j));
  return Partition(std::move(cols));
}

namespace {

void require_cell(const Partition& shape, Cell c) {
  if (!shape.contains(c)) {
    throw Error(Errc::cell_outside_diagram, "(" + std::to_string(c.row) + "," +
                                                std::to_string(c.col) + ") not in [" +
                                                shape.to_string() + "]");
  }
}

}  // namespace

int hook_length(const Partition& shape, Cell c) {
  require_cell(shape, c);
  return shape.part(c.row) + shape.column_length(c.col) - c.row - c.col + 1;
}

int content_sp(const Partition& shape, Cell c) {
  require_cell(shape, c);
  const int i = c.row, j = c.col;
  if (i > j) return shape.part(i) + shape.part(j) - i - j + 2;
  return i + j - shape.column_length(i) - shape.column_length(j);
}

int content_o(const Partition& shape, Cell c) {
  require_cell(shape, c);
  const int i = c.row, j = c.col;
  if (i >= j) return shape.part(i) + shape.part(j) - i - j;
  return i + j - shape.column_length(i) - shape.column_length(j) - 2;
}

int b_stat(const Partition& shape) {
  int b = 0;
  for (int i = 1; i <= shape.length(); ++i) b += (i - 1) * shape.part(i);
  return b;
}

MuVector::MuVector(const Partition& shape, int n) {
  if (n < shape.length() || n < 1) {
    throw Error(Errc::too_few_rows, "n=" + std::to_string(n) + " but shape [" + shape.to_string() +
                                        "] has " + std::to_string(shape.length()) + " parts");
  }
  entries_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) entries_[static_cast<std::size_t>(i - 1)] = shape.part(i) + n - i;
}

MuVector mu_vector(const Partition& shape, int n) { return MuVector(shape, n); }

Partition remove_first_hook(const Partition& shape) {
  std::vector<int> rest;
  for (int i = 2; i <= shape.length(); ++i) rest.push_back(shape.part(i) - 1);
  return Partition(std::move(rest));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int r) {
  std::vector<Partition> out;
  if (r < 0) return out;
  std::vector<int> prefix;
  partitions_rec(r, r, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int r = 0; r <= max_size; ++r) {
    auto block = partitions_of(r);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace hookcontent
