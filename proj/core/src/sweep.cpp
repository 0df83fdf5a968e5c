#include "hookcontent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "hookcontent/errors.hpp"
#include "hookcontent/tableaux.hpp"

namespace hookcontent {

RouteSet RouteSet::standard() {
  return RouteSet{
      [](Family f, const Partition& s, int n) { return char_enumeration(f, s, n).poly; },
      [](Family f, const Partition& s, int n) { return char_determinant(f, s, n).poly; },
      [](Family f, const Partition& s, int n) { return char_product(f, s, n).poly; },
      [](Family f, const Partition& s, int n) { return char_mu_formula(f, s, n).poly; },
  };
}

const RouteFn& RouteSet::get(Route r) const {
  switch (r) {
    case Route::enumeration: return enumeration;
    case Route::determinant: return determinant;
    case Route::product: return product;
    case Route::mu_formula: return mu_formula;
  }
  return product;
}

namespace {

using Outcome = std::pair<bool, std::string>;

struct RouteValue {
  Route route;
  std::optional<LaurentPoly> poly;
  std::string error;

  std::string describe() const {
    return std::string(route_name(route)) + "=" + (poly ? poly->to_string() : "error(" + error + ")");
  }
};

class TaskChecker {
 public:
  TaskChecker(Family family, const Partition& shape, int n, const RouteSet& routes)
      : family_(family), shape_(shape), n_(n), routes_(routes) {}

  std::vector<CheckResult> run() {
    evaluate_routes();
    record("routes", [&] { return routes_agree(); });
    switch (family_) {
      case Family::gl:
        record("gl-coefficients", [&] { return gl_coefficients(); });
        record("q=1", [&] { return q_at_one(); });
        break;
      case Family::sp:
      case Family::odd_o:
      case Family::even_o:
        record("hook-lemma", [&] {
          return compare("hook", hook_product(shape_, n_), "mu-form", hook_product_mu(shape_, n_));
        });
        record("content-lemma", [&] {
          return compare("contents", content_product(family_, shape_, n_), "mu-form",
                         content_product_mu(family_, shape_, n_));
        });
        record("palindromy", [&] { return palindromic(); });
        record("q=1", [&] { return q_at_one(); });
        if (family_ == Family::sp) record("weight-symmetry", [&] { return weight_symmetry(); });
        break;
      case Family::so_even:
        record("so-negative", [&] {
          return compare("negative", so_enumeration(shape_, n_, false), "so_char", so_char(shape_, n_));
        });
        record("so-split", [&] { return so_split(); });
        record("palindromy", [&] { return palindromic(); });
        record("q=1", [&] { return q_at_one(); });
        break;
    }
    return std::move(rows_);
  }

 private:
  template <class Body>
  void record(std::string name, Body body) {
    CheckResult r{family_, shape_, n_, std::move(name), false, {}};
    try {
      auto [ok, detail] = body();
      r.passed = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    rows_.push_back(std::move(r));
  }

  void evaluate_routes() {
    for (Route route : routes_for(family_)) {
      RouteValue v{route, std::nullopt, {}};
      try {
        v.poly = routes_.get(route)(family_, shape_, n_);
      } catch (const std::exception& e) {
        v.error = e.what();
      }
      values_.push_back(std::move(v));
    }
  }

  const LaurentPoly& product_value() const {
    for (const auto& v : values_) {
      if (v.route == Route::product) {
        if (!v.poly) throw std::runtime_error("product route failed: " + v.error);
        return *v.poly;
      }
    }
    throw std::logic_error("product route missing");
  }

  static Outcome compare(const std::string& lhs_name, const LaurentPoly& lhs, const std::string& rhs_name,
                         const LaurentPoly& rhs) {
    if (lhs == rhs) return {true, {}};
    return {false, lhs_name + "=" + lhs.to_string() + " " + rhs_name + "=" + rhs.to_string()};
  }

  Outcome routes_agree() const {
    bool ok = std::all_of(values_.begin(), values_.end(), [&](const RouteValue& v) {
      return v.poly && *v.poly == *values_.front().poly;
    });
    if (ok) return {true, {}};
    std::string detail;
    for (const auto& v : values_) detail += (detail.empty() ? "" : " ") + v.describe();
    return {false, detail};
  }

  Outcome palindromic() const {
    const LaurentPoly& p = product_value();
    return compare("poly", p, "inverse", p.substitute_inverse());
  }

  Outcome q_at_one() const {
    const BigInt from_poly = product_value().eval_at_one();
    std::size_t count = 0;
    if (family_ == Family::so_even) {
      count = even_split(shape_, n_).positive;
    } else {
      count = count_tableaux(family_, shape_, n_);
    }
    const BigInt closed = dimension(family_, shape_, n_);
    std::ostringstream os;
    os << "poly(1)=" << from_poly << " tableaux=" << count << " formula=" << closed;
    return {from_poly == count && closed == count, os.str()};
  }

  Outcome gl_coefficients() const {
    std::map<int, std::size_t> by_sum;
    for_each_tableau(Family::gl, shape_, n_, [&](const Tableau& t) { ++by_sum[stats(t).entry_sum]; });
    const LaurentPoly& p = product_value();
    std::vector<LaurentPoly::Term> expected;
    for (const auto& [sum, count] : by_sum) expected.emplace_back(sum - shape_.size(), BigInt(count));
    return compare("product", p, "counts-by-|T|", LaurentPoly(expected));
  }

  Outcome weight_symmetry() const {
    std::vector<std::vector<int>> weights, negated;
    for_each_tableau(family_, shape_, n_, [&](const Tableau& t) {
      auto w = stats(t).weight;
      weights.push_back(w);
      for (int& x : w) x = -x;
      negated.push_back(std::move(w));
    });
    std::sort(weights.begin(), weights.end());
    std::sort(negated.begin(), negated.end());
    return {weights == negated, weights == negated ? "" : "weight multiset not closed under negation"};
  }

  Outcome so_split() const {
    const EvenSplit split = even_split(shape_, n_);
    const BigInt d_o = dimension(Family::even_o, shape_, n_);
    const BigInt half = d_so(shape_, n_);
    std::ostringstream os;
    os << "positive=" << split.positive << " negative=" << split.negative << " both=" << split.both
       << " neither=" << split.neither << " d_o=" << d_o << " d_so=" << half;
    const bool ok = split.positive == split.negative && BigInt(split.positive) == half && d_o % 2 == 0 &&
                    2 * half == d_o && BigInt(split.total) == d_o;
    return {ok, os.str()};
  }

  Family family_;
  const Partition& shape_;
  int n_;
  const RouteSet& routes_;
  std::vector<RouteValue> values_;
  std::vector<CheckResult> rows_;
};

struct Task {
  Family family;
  Partition shape;
  int n;
};

std::vector<Task> build_tasks(const SweepOptions& options) {
  std::vector<Task> tasks;
  for (const Partition& shape : partitions_up_to(options.max_size)) {
    for (int n = std::max(1, shape.length()); n <= options.max_n; ++n) {
      for (Family f : options.families) {
        if (f == Family::so_even && shape.length() != n) continue;
        tasks.push_back({f, shape, n});
      }
    }
  }
  return tasks;
}

}  // namespace

std::vector<CheckResult> check_task(Family family, const Partition& shape, int n, const RouteSet& routes) {
  return TaskChecker(family, shape, n, routes).run();
}

unsigned threads_from_env(unsigned fallback) {
  if (const char* env = std::getenv("TABLEAUX_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return fallback;
}

SweepReport run_sweep(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Task> tasks = build_tasks(options);
  std::vector<std::vector<CheckResult>> results(tasks.size());

  unsigned threads = options.threads;
  if (threads == 0) threads = threads_from_env(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size()))));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      results[k] = check_task(tasks[k].family, tasks[k].shape, tasks[k].n, options.routes);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SweepReport report;
  report.tasks = tasks.size();
  report.threads = threads;
  for (auto& block : results) {
    for (auto& row : block) {
      (row.passed ? report.passed : report.failed)++;
      report.rows.push_back(std::move(row));
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace hookcontent
