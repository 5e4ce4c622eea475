#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "bbsuper/datum.hpp"

namespace bbsuper {

/// Sparse multivariate polynomial with big-integer coefficients. Terms are
/// keyed by exponent vectors; the lexicographically largest is the leading term.
class Poly {
 public:
  using Exponent = std::vector<int>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const BigInt& c);
  static Poly variable(std::size_t nvars, std::size_t k);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  int total_degree() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly operator+(const Poly& other) const { return Poly(*this) += other; }
  Poly operator-(const Poly& other) const { return Poly(*this) -= other; }
  Poly operator*(const Poly& other) const;
  Poly operator-() const;

  /// Quotient when `divisor` divides this exactly in Z[t]; throws
  /// InexactDivision otherwise.
  Poly exact_div(const Poly& divisor) const;

  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Exponent& e, const BigInt& c);

  std::size_t nvars_ = 0;
  std::map<Exponent, BigInt> terms_;
};

}  // namespace bbsuper
