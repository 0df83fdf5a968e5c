#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "hookcontent/errors.hpp"
#include "hookcontent/serialize.hpp"
#include "hookcontent/tableaux.hpp"

namespace hookcontent::cli {

namespace {

struct Common {
  std::string family = "sp";
  std::string shape;
  int n = 0;
  std::string format = "text";
};

void add_common(CLI::App* sub, Common& c, std::vector<std::string> formats) {
  std::vector<std::string> families;
  for (Family f : kAllFamilies) families.emplace_back(family_name(f));
  sub->add_option("--family", c.family, "gl, sp, odd-o, even-o or so-even")
      ->required()
      ->check(CLI::IsMember(families));
  sub->add_option("--shape", c.shape, "Partition, comma separated (e.g. 7,5,4,1); empty for ()");
  sub->add_option("--n", c.n, "Alphabet / rank parameter")->required();
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(formats)));
}

struct Resolved {
  Family family;
  Partition shape;
  int n;
};

Resolved resolve(const Common& c) {
  return {*parse_family(c.family), Partition::parse(c.shape), c.n};
}

std::string shape_label(const Partition& p) { return p.empty() ? "()" : p.to_string(); }

int do_enumerate(const Common& c, std::ostream& out) {
  const Resolved r = resolve(c);
  std::vector<std::string> rendered;
  if (r.family == Family::so_even) {
    // SO(2n) tableaux are the positive even orthogonal ones.
    if (r.shape.length() != r.n) throw Error(Errc::shape_not_full, "so-even needs exactly n parts");
    for_each_tableau(Family::even_o, r.shape, r.n, [&](const Tableau& t) {
      if (counts_as_positive(classify_even(t))) rendered.push_back(t.render());
    });
  } else {
    for_each_tableau(r.family, r.shape, r.n, [&](const Tableau& t) { rendered.push_back(t.render()); });
  }
  if (c.format == "json") {
    nlohmann::json shape = nlohmann::json::array();
    for (int p : r.shape.parts()) shape.push_back(p);
    out << nlohmann::json{{"family", c.family}, {"shape", shape}, {"n", r.n}, {"count", rendered.size()},
                          {"tableaux", rendered}}
               .dump()
        << '\n';
  } else if (c.format == "csv") {
    out << "tableau\n";
    for (const auto& s : rendered) out << '"' << s << "\"\n";
  } else {
    for (const auto& s : rendered) out << s << '\n';
  }
  return kOk;
}

int do_count(const Common& c, std::ostream& out) {
  const Resolved r = resolve(c);
  std::size_t enumerated = 0;
  if (r.family == Family::so_even) {
    enumerated = even_split(r.shape, r.n).positive;
  } else {
    enumerated = count_tableaux(r.family, r.shape, r.n);
  }
  const BigInt formula = dimension(r.family, r.shape, r.n);
  const bool ok = formula == enumerated;
  if (c.format == "json") {
    out << nlohmann::json{{"family", c.family},
                          {"group", group_label(r.family, r.n)},
                          {"shape", shape_label(r.shape)},
                          {"n", r.n},
                          {"enumerated", std::to_string(enumerated)},
                          {"formula", formula.str()},
                          {"ok", ok}}
               .dump()
        << '\n';
  } else {
    out << "enumerated=" << enumerated << " formula=" << formula << (ok ? " OK" : " MISMATCH") << '\n';
  }
  return ok ? kOk : kDisagreement;
}

int do_char(const Common& c, const std::string& route_text, bool all_routes, std::ostream& out) {
  const Resolved r = resolve(c);
  std::vector<Route> routes;
  if (all_routes) {
    routes = routes_for(r.family);
  } else {
    routes.push_back(*parse_route(route_text));
  }
  std::vector<CharResult> results;
  for (Route route : routes) results.push_back(compute_char(r.family, route, r.shape, r.n));
  const bool agree = std::all_of(results.begin(), results.end(),
                                 [&](const CharResult& x) { return x.poly == results.front().poly; });
  const char* verdict = agree ? "AGREE" : "DISAGREE";

  if (c.format == "json") {
    if (!all_routes) {
      out << char_result_to_json(results.front()).dump() << '\n';
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& x : results) arr.push_back(char_result_to_json(x));
      out << nlohmann::json{{"results", arr}, {"verdict", verdict}}.dump() << '\n';
    }
  } else if (c.format == "csv") {
    out << csv_header() << '\n';
    for (const auto& x : results) out << csv_row(x) << '\n';
  } else if (c.format == "latex") {
    for (const auto& x : results) {
      if (all_routes) out << route_name(x.route) << ": ";
      out << emit_latex(x.poly) << '\n';
    }
    if (all_routes) out << verdict << '\n';
  } else {
    out << group_label(r.family, r.n) << " shape=" << shape_label(r.shape) << " n=" << r.n << '\n';
    for (const auto& x : results) out << route_name(x.route) << ": " << x.poly << '\n';
    out << "dimension: " << results.front().dimension << '\n';
    if (all_routes) out << "verdict: " << verdict << '\n';
  }
  return agree ? kOk : kDisagreement;
}

int do_classify(const Common& c, const std::string& filter, std::ostream& out) {
  const Resolved r = resolve(c);
  if (r.family != Family::even_o && r.family != Family::so_even) {
    throw Error(Errc::unsupported_family, "classify applies to even-o tableaux");
  }
  if (r.shape.length() != r.n) {
    throw Error(Errc::shape_not_full, "shape [" + r.shape.to_string() + "] needs exactly n=" +
                                          std::to_string(r.n) + " parts");
  }
  auto keep = [&](EvenClass k) {
    if (filter == "all") return true;
    if (filter == "positive") return counts_as_positive(k);
    if (filter == "negative") return counts_as_negative(k);
    return even_class_name(k) == filter;
  };
  nlohmann::json arr = nlohmann::json::array();
  for_each_tableau(Family::even_o, r.shape, r.n, [&](const Tableau& t) {
    const EvenClass k = classify_even(t);
    if (!keep(k)) return;
    if (c.format == "json") {
      arr.push_back({{"tableau", t.render()}, {"class", std::string(even_class_name(k))}});
    } else if (c.format == "csv") {
      out << '"' << t.render() << "\"," << even_class_name(k) << '\n';
    } else {
      out << t.render() << ' ' << even_class_name(k) << '\n';
    }
  });
  if (c.format == "json") out << arr.dump() << '\n';
  return kOk;
}

}  // namespace

int run_verify(const SweepOptions& options, std::ostream& out) {
  const SweepReport report = run_sweep(options);
  for (const auto& row : report.rows) {
    out << (row.passed ? "PASS" : "FAIL") << ' ' << family_name(row.family) << " ["
        << shape_label(row.shape) << "] n=" << row.n << ' ' << row.check;
    if (!row.passed) out << "  " << row.detail;
    out << '\n';
  }
  out << "summary: tasks=" << report.tasks << " checks=" << report.rows.size() << " passed=" << report.passed
      << " failed=" << report.failed << (report.ok() ? " OK" : " FAILED") << '\n';
  return report.ok() ? kOk : kDisagreement;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic and orthogonal tableaux: enumeration, characters, hook-content products",
               "tableaux"};
  app.require_subcommand(1);

  Common enum_opts, count_opts, char_opts, classify_opts;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List admissible tableaux, one per line");
  add_common(enumerate_cmd, enum_opts, {"text", "json", "csv"});

  auto* count_cmd = app.add_subcommand("count", "Compare the tableau count with the closed-form dimension");
  add_common(count_cmd, count_opts, {"text", "json"});

  auto* char_cmd = app.add_subcommand("char", "Character specialisation as a Laurent polynomial in q");
  add_common(char_cmd, char_opts, {"text", "json", "csv", "latex"});
  std::string route = "product";
  bool all_routes = false;
  char_cmd->add_option("--route", route, "enumeration, determinant, product or mu")
      ->check(CLI::IsMember({"enumeration", "determinant", "product", "mu"}));
  char_cmd->add_flag("--all-routes", all_routes, "Evaluate every route and report AGREE/DISAGREE");

  auto* classify_cmd = app.add_subcommand("classify", "Positive/negative split of even orthogonal tableaux");
  add_common(classify_cmd, classify_opts, {"text", "json", "csv"});
  std::string filter = "all";
  classify_cmd->add_option("--class", filter, "positive, negative, both, neither or all")
      ->check(CLI::IsMember({"positive", "negative", "both", "neither", "all"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check every identity over all small shapes");
  SweepOptions sweep;
  verify_cmd->add_option("--max-size", sweep.max_size, "Largest |λ|")->check(CLI::Range(0, 12));
  verify_cmd->add_option("--max-n", sweep.max_n, "Largest n")->check(CLI::Range(1, 8));
  verify_cmd->add_option("--threads", sweep.threads, "Worker threads (0: TABLEAUX_THREADS or all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate_cmd) return do_enumerate(enum_opts, out);
    if (*count_cmd) return do_count(count_opts, out);
    if (*char_cmd) return do_char(char_opts, route, all_routes, out);
    if (*classify_cmd) return do_classify(classify_opts, filter, out);
    if (*verify_cmd) return run_verify(sweep, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_internal(e.code()) ? kDisagreement : kUsage;
  }
  return kUsage;
}

}  // namespace hookcontent::cli
