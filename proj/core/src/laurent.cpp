#include "hookcontent/laurent.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "hookcontent/errors.hpp"

namespace hookcontent {

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms)
    : LaurentPoly(std::vector<Term>(terms)) {}

LaurentPoly::LaurentPoly(const std::vector<Term>& terms) {
  if (terms.empty()) return;
  auto [lo, hi] = std::minmax_element(terms.begin(), terms.end(),
                                      [](const Term& a, const Term& b) { return a.first < b.first; });
  low_ = lo->first;
  coeffs_.assign(static_cast<std::size_t>(hi->first - low_ + 1), BigInt(0));
  for (const auto& [e, c] : terms) coeffs_[static_cast<std::size_t>(e - low_)] += c;
  normalize();
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& coeff) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

void LaurentPoly::normalize() {
  std::size_t last = coeffs_.size();
  while (last > 0 && coeffs_[last - 1] == 0) --last;
  coeffs_.resize(last);
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
  if (coeffs_.empty()) low_ = 0;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<LaurentPoly::Term> LaurentPoly::terms() const {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  }
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(max_exponent(), rhs.max_exponent());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), BigInt(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - low_ + 1), BigInt(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[static_cast<std::size_t>(rhs.low_ - low_) + k] += rhs.coeffs_[k];
  }
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator-(LaurentPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.normalize();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
  LaurentPoly out;
  if (is_zero()) return out;
  out.low_ = -max_exponent();
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return out;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(Errc::inexact_division, "division by zero polynomial");
  if (num.is_zero()) return {};

  // Divide the coefficient vectors as ordinary polynomials in q, then
  // restore the exponent offset.
  std::vector<BigInt> rem;
  for (int e = num.min_exponent(); e <= num.max_exponent(); ++e) rem.push_back(num.coefficient(e));
  std::vector<BigInt> div;
  for (int e = den.min_exponent(); e <= den.max_exponent(); ++e) div.push_back(den.coefficient(e));

  auto fail = [&] {
    return Error(Errc::inexact_division, "(" + num.to_string() + ") / (" + den.to_string() + ")");
  };
  if (rem.size() < div.size()) throw fail();

  const std::size_t qlen = rem.size() - div.size() + 1;
  std::vector<BigInt> quot(qlen);
  const BigInt& lead = div.back();
  BigInt q, r;
  for (std::size_t k = qlen; k-- > 0;) {
    BigInt& top = rem[k + div.size() - 1];
    if (top == 0) continue;
    boost::multiprecision::divide_qr(top, lead, q, r);
    if (r != 0) throw fail();
    for (std::size_t t = 0; t < div.size(); ++t) {
      if (div[t] != 0) rem[k + t] -= q * div[t];
    }
    quot[k] = q;
  }
  for (const auto& c : rem) {
    if (c != 0) throw fail();
  }

  std::vector<LaurentPoly::Term> terms;
  const int low = num.min_exponent() - den.min_exponent();
  for (std::size_t k = 0; k < qlen; ++k) {
    if (quot[k] != 0) terms.emplace_back(low + static_cast<int>(k), quot[k]);
  }
  return LaurentPoly(terms);
}

LaurentPoly angle_bracket(int i) {
  if (i < 0) throw std::invalid_argument("angle_bracket: negative index " + std::to_string(i));
  if (i == 0) return LaurentPoly(1);
  return LaurentPoly{{-i, -1}, {i, 1}};
}

LaurentPoly angle_factorial(int i) {
  if (i < 0) throw std::invalid_argument("angle_factorial: negative index " + std::to_string(i));
  LaurentPoly out(1);
  for (int k = 1; k <= i; ++k) out *= angle_bracket(k);
  return out;
}

LaurentPoly square_bracket(int i) {
  if (i < 1) throw std::invalid_argument("square_bracket: index must be positive, got " +
                                         std::to_string(i));
  return LaurentPoly{{0, -1}, {i, 1}};
}

LaurentPoly product(std::vector<LaurentPoly> factors) {
  if (factors.empty()) return LaurentPoly(1);
  // Pairwise multiplication keeps operand sizes balanced.
  while (factors.size() > 1) {
    std::vector<LaurentPoly> next;
    next.reserve((factors.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < factors.size(); k += 2) next.push_back(factors[k] * factors[k + 1]);
    if (factors.size() % 2) next.push_back(std::move(factors.back()));
    factors = std::move(next);
  }
  return std::move(factors.front());
}

}  // namespace hookcontent
