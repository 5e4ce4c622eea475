#include "bbsuper/poly.hpp"

#include <sstream>

#include "bbsuper/error.hpp"

namespace bbsuper {

Poly Poly::constant(std::size_t nvars, const BigInt& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t k) {
  Poly p(nvars);
  Exponent e(nvars, 0);
  e[k] = 1;
  p.add_term(e, 1);
  return p;
}

int Poly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

void Poly::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator*(const Poly& other) const {
  Poly out(std::max(nvars_, other.nvars_));
  Exponent e(out.nvars_, 0);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::exact_div(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InexactDivision, "division by zero polynomial");
  Poly quotient(nvars_);
  Poly rest(*this);
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  while (!rest.is_zero()) {
    const auto& [re, rc] = *rest.terms_.rbegin();
    Exponent e(re.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = re[k] - lead_e[k];
      if (e[k] < 0) throw Error(ErrorKind::InexactDivision, "leading monomial not divisible");
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
      throw Error(ErrorKind::InexactDivision, "leading coefficient not divisible");
    Poly term(nvars_);
    term.add_term(e, rc / lead_c);
    quotient += term;
    rest -= term * divisor;
  }
  return quotient;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int p = 0; p < e[k]; ++p) term *= point[k];
    total += term;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? "" : " + ") << c.get_str();
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) os << "*t" << (k + 1) << (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
    first = false;
  }
  return os.str();
}

}  // namespace bbsuper
