#include "hookcontent/tableaux.hpp"

#include <algorithm>
#include <charconv>

#include "hookcontent/errors.hpp"

namespace hookcontent {

std::string Symbol::render(int n) const {
  if (is_infinity(n)) return "inf";
  std::string s = std::to_string(index());
  if (is_barred()) s += '~';
  return s;
}

std::vector<Symbol> alphabet(Family family, int n) {
  std::vector<Symbol> out;
  switch (family) {
    case Family::gl:
      for (int k = 1; k <= n; ++k) out.push_back(Symbol::unbarred(k));
      break;
    case Family::sp:
    case Family::even_o:
    case Family::so_even:
      for (int r = 1; r <= 2 * n; ++r) out.emplace_back(r);
      break;
    case Family::odd_o:
      for (int r = 1; r <= 2 * n + 1; ++r) out.emplace_back(r);
      break;
  }
  return out;
}

namespace {

std::vector<int> row_starts(const Partition& shape) {
  std::vector<int> starts;
  int acc = 0;
  for (int p : shape.parts()) {
    starts.push_back(acc);
    acc += p;
  }
  return starts;
}

bool in_alphabet(Symbol s, Family family, int n) {
  switch (family) {
    case Family::gl: return !s.is_barred() && s.index() >= 1 && s.index() <= n;
    case Family::sp:
    case Family::even_o:
    case Family::so_even: return s.rank() >= 1 && s.rank() <= 2 * n;
    case Family::odd_o: return s.rank() >= 1 && s.rank() <= 2 * n + 1;
  }
  return false;
}

}  // namespace

Tableau::Tableau(Partition shape, Family family, int n, std::vector<Symbol> entries)
    : shape_(std::move(shape)),
      family_(family),
      n_(n),
      row_start_(row_starts(shape_)),
      entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_.size()) {
    throw std::invalid_argument("tableau has " + std::to_string(entries_.size()) +
                                " entries for a shape of size " + std::to_string(shape_.size()));
  }
}

std::string Tableau::render() const {
  std::string s;
  for (int i = 1; i <= shape_.length(); ++i) {
    if (i > 1) s += '/';
    for (int j = 1; j <= shape_.part(i); ++j) {
      if (j > 1) s += ',';
      s += at(i, j).render(n_);
    }
  }
  return s;
}

namespace {

Symbol parse_symbol(std::string_view tok, int n) {
  if (tok == "inf") return Symbol::infinity(n);
  bool barred = false;
  if (!tok.empty() && tok.back() == '~') {
    barred = true;
    tok.remove_suffix(1);
  }
  int k = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
  if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size() || k < 1) {
    throw Error(Errc::bad_symbol, "'" + std::string(tok) + "'");
  }
  return barred ? Symbol::barred(k) : Symbol::unbarred(k);
}

}  // namespace

Tableau parse_tableau(std::string_view text, Family family, int n) {
  std::vector<int> parts;
  std::vector<Symbol> entries;
  if (!text.empty()) {
    std::size_t pos = 0;
    while (true) {
      const std::size_t slash = text.find('/', pos);
      std::string_view row = text.substr(pos, slash == std::string_view::npos ? slash : slash - pos);
      int len = 0;
      std::size_t p = 0;
      while (true) {
        const std::size_t comma = row.find(',', p);
        entries.push_back(parse_symbol(row.substr(p, comma == std::string_view::npos ? comma : comma - p), n));
        ++len;
        if (comma == std::string_view::npos) break;
        p = comma + 1;
      }
      parts.push_back(len);
      if (slash == std::string_view::npos) break;
      pos = slash + 1;
    }
  }
  if (!std::is_sorted(parts.rbegin(), parts.rend())) {
    throw Error(Errc::bad_symbol, "row lengths of '" + std::string(text) + "' are not a partition");
  }
  return Tableau(Partition(std::move(parts)), family, n, std::move(entries));
}

bool is_semistandard(const Tableau& t) {
  const Partition& shape = t.shape();
  for (const Cell c : shape.cells()) {
    if (c.col > 1 && t.at(c.row, c.col - 1) > t.at(c)) return false;
    if (c.row > 1 && t.at(c.row - 1, c.col) >= t.at(c)) return false;
  }
  return true;
}

bool is_symplectic(const Tableau& t) {
  for (const Cell c : t.shape().cells()) {
    if (t.at(c) < Symbol::unbarred(c.row)) return false;
  }
  return true;
}

namespace {

/// Entries ≤ ī in column `col`; columns are strictly increasing, so this is
/// a prefix length.
int count_at_most_barred(const Tableau& t, int col, int i) {
  const int len = t.shape().column_length(col);
  int count = 0;
  while (count < len && t.at(count + 1, col) <= Symbol::barred(i)) ++count;
  return count;
}

}  // namespace

bool is_orthogonal(const Tableau& t) {
  const int n = t.n();
  const Partition& shape = t.shape();
  for (int i = 1; i <= n; ++i) {
    const int alpha = count_at_most_barred(t, 1, i);
    const int beta = count_at_most_barred(t, 2, i);
    if (alpha + beta > 2 * i) return false;
    if (alpha + beta != 2 * i) continue;

    // (ii): a missing box T_{β,2} makes the hypothesis false.
    if (alpha > beta && t.at(alpha, 1) == Symbol::barred(i) && beta >= 1 &&
        t.at(beta, 2) == Symbol::unbarred(i)) {
      if (alpha < 2 || t.at(alpha - 1, 1) != Symbol::unbarred(i)) return false;
    }
    // (iii): a missing box T_{α−1,j} makes the conclusion false.
    if (alpha == i && beta == i && t.at(alpha, 1) == Symbol::unbarred(i)) {
      for (int j = 1; j <= shape.part(alpha); ++j) {
        if (t.at(alpha, j) != Symbol::barred(i)) continue;
        if (alpha < 2 || t.at(alpha - 1, j) != Symbol::unbarred(i)) return false;
      }
    }
  }
  return true;
}

bool is_admissible(const Tableau& t) {
  for (Symbol s : t.entries()) {
    if (!in_alphabet(s, t.family(), t.n())) return false;
  }
  if (!is_semistandard(t)) return false;
  switch (t.family()) {
    case Family::gl: return true;
    case Family::sp: return is_symplectic(t);
    case Family::odd_o:
    case Family::even_o:
    case Family::so_even: return is_orthogonal(t);
  }
  return false;
}

/// Row-major backtracking. Partial fillings are pruned on semistandardness,
/// the symplectic row bound and the orthogonal α_i + β_i ≤ 2i bound; the
/// remaining orthogonal conditions are checked on complete fillings.
class TableauEnumerator {
 public:
  TableauEnumerator(Family family, const Partition& shape, int n)
      : family_(family),
        n_(n),
        symbols_(alphabet(family, n)),
        cells_(shape.cells()),
        tableau_(shape, family, n, std::vector<Symbol>(static_cast<std::size_t>(shape.size()))) {}

  void run(const std::function<void(const Tableau&)>& visit) { fill(0, visit); }

 private:
  Symbol& slot(Cell c) { return tableau_.entries_[tableau_.offset(c)]; }

  bool orthogonal_bound_ok(Cell c) const {
    if (c.col > 2) return true;
    const Symbol s = tableau_.at(c);
    if (s.is_infinity(n_)) return true;
    for (int i = s.index(); i <= n_; ++i) {
      int total = 0;
      for (int col = 1; col <= 2; ++col) {
        const int len = tableau_.shape().column_length(col);
        for (int row = 1; row <= len; ++row) {
          const Cell here{row, col};
          if (filled(here, c) && tableau_.at(here) <= Symbol::barred(i)) ++total;
        }
      }
      if (total > 2 * i) return false;
    }
    return true;
  }

  // Row-major order: (r,c) is filled once (r,c) <= current position.
  static bool filled(Cell here, Cell current) {
    return here.row < current.row || (here.row == current.row && here.col <= current.col);
  }

  void fill(std::size_t k, const std::function<void(const Tableau&)>& visit) {
    if (k == cells_.size()) {
      if (family_ == Family::gl || family_ == Family::sp || is_orthogonal(tableau_)) visit(tableau_);
      return;
    }
    const Cell c = cells_[k];
    Symbol lower = symbols_.front();
    if (c.col > 1) lower = std::max(lower, tableau_.at(c.row, c.col - 1));
    if (family_ == Family::sp) lower = std::max(lower, Symbol::unbarred(c.row));
    const bool has_above = c.row > 1;
    const Symbol above = has_above ? tableau_.at(c.row - 1, c.col) : Symbol(0);
    const bool orthogonal = family_ == Family::odd_o || family_ == Family::even_o;

    for (Symbol s : symbols_) {
      if (s < lower) continue;
      if (has_above && s <= above) continue;
      slot(c) = s;
      // A larger symbol touches fewer of the α_i + β_i counts, so a
      // failure here does not end the scan.
      if (orthogonal && !orthogonal_bound_ok(c)) continue;
      fill(k + 1, visit);
    }
  }

  Family family_;
  int n_;
  std::vector<Symbol> symbols_;
  std::vector<Cell> cells_;
  Tableau tableau_;
};

void for_each_tableau(Family family, const Partition& shape, int n,
                      const std::function<void(const Tableau&)>& visit) {
  if (family == Family::so_even) {
    throw Error(Errc::unsupported_family, "so-even tableaux are the even orthogonal ones; classify them");
  }
  if (n < 1 || n < shape.length()) {
    throw Error(Errc::too_few_rows, "n=" + std::to_string(n) + " for shape [" + shape.to_string() + "]");
  }
  TableauEnumerator(family, shape, n).run(visit);
}

std::vector<Tableau> enumerate(Family family, const Partition& shape, int n) {
  std::vector<Tableau> out;
  for_each_tableau(family, shape, n, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::size_t count_tableaux(Family family, const Partition& shape, int n) {
  std::size_t count = 0;
  for_each_tableau(family, shape, n, [&](const Tableau&) { ++count; });
  return count;
}

Stats stats(const Tableau& t) {
  Stats s;
  const int n = t.n();
  s.weight.assign(static_cast<std::size_t>(n), 0);
  for (Symbol sym : t.entries()) {
    if (sym.is_infinity(n) && t.family() == Family::odd_o) {
      ++s.infinities;
      continue;
    }
    const int v = sym.value(n);
    s.entry_sum += v;
    if (sym.is_barred()) {
      ++s.r_minus;
      --s.weight[static_cast<std::size_t>(sym.index() - 1)];
    } else {
      ++s.r_plus;
      ++s.weight[static_cast<std::size_t>(sym.index() - 1)];
    }
  }
  s.r = s.r_plus - s.r_minus;
  return s;
}

std::string_view even_class_name(EvenClass c) noexcept {
  switch (c) {
    case EvenClass::positive: return "positive";
    case EvenClass::negative: return "negative";
    case EvenClass::both: return "both";
    case EvenClass::neither: return "neither";
  }
  return "?";
}

EvenClass classify_even(const Tableau& t) {
  const int n = t.n();
  if (t.shape().length() != n) {
    throw Error(Errc::shape_not_full, "shape [" + t.shape().to_string() + "] needs exactly " +
                                          std::to_string(n) + " parts");
  }
  auto leads_with_own_index = [&](int i) {
    const Symbol first = t.at(i, 1);
    return first == Symbol::unbarred(i) || first == Symbol::barred(i);
  };

  int j = 1;
  while (j <= n && leads_with_own_index(j)) ++j;
  if (j > n) {
    int unbarred = 0;
    for (int i = 1; i <= n; ++i) unbarred += t.at(i, 1).is_barred() ? 0 : 1;
    return unbarred % 2 == 0 ? EvenClass::positive : EvenClass::negative;
  }
  // Row j is the first whose leading entry is not j or j̄.
  if (j < n && t.at(j, 1) > Symbol::barred(j)) return EvenClass::both;
  return EvenClass::neither;
}

}  // namespace hookcontent
