#pragma once

// Exhaustive verification over all shapes up to a size bound: every route
// agrees, the product identities hold, characters are palindromic, q = 1
// values match tableau counts, and the SO(2n) split halves the O(2n) count.

#include <functional>
#include <string>
#include <vector>

#include "hookcontent/characters.hpp"

namespace hookcontent {

using RouteFn = std::function<LaurentPoly(Family, const Partition&, int)>;

/// The route implementations a sweep compares. Swapping one out is how the
/// tests confirm that a corrupted formula is detected.
struct RouteSet {
  RouteFn enumeration;
  RouteFn determinant;
  RouteFn product;
  RouteFn mu_formula;

  static RouteSet standard();
  const RouteFn& get(Route r) const;
};

struct SweepOptions {
  int max_size = 6;
  int max_n = 4;
  /// 0 picks TABLEAUX_THREADS or the hardware concurrency.
  unsigned threads = 0;
  std::vector<Family> families{std::begin(kAllFamilies), std::end(kAllFamilies)};
  RouteSet routes = RouteSet::standard();
};

struct CheckResult {
  Family family;
  Partition shape;
  int n;
  std::string check;
  bool passed;
  std::string detail;
};

struct SweepReport {
  std::vector<CheckResult> rows;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t tasks = 0;
  unsigned threads = 1;
  double seconds = 0.0;

  bool ok() const noexcept { return failed == 0; }
};

/// Rows come back in task order (shape, then n, then family) regardless of
/// the thread count.
SweepReport run_sweep(const SweepOptions& options);

/// Checks for one (family, λ, n). so_even tasks require exactly n parts.
std::vector<CheckResult> check_task(Family family, const Partition& shape, int n,
                                    const RouteSet& routes);

/// TABLEAUX_THREADS if set to a positive integer, else `fallback`.
unsigned threads_from_env(unsigned fallback);

}  // namespace hookcontent
