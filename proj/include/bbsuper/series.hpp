#pragma once

#include <map>

#include "bbsuper/datum.hpp"
#include "bbsuper/root_table.hpp"

namespace bbsuper {

/// Truncated formal series e^{base} * sum_beta c_beta e^{-beta} over the cone
/// {beta in Q+ : ht(beta) <= H}. The factor e^{base} is metadata only.
class CharSeries {
 public:
  CharSeries() = default;
  CharSeries(std::size_t rank, int height_bound);
  CharSeries(std::size_t rank, int height_bound, Weight base);

  static CharSeries unit(std::size_t rank, int height_bound);

  std::size_t rank() const { return rank_; }
  int height_bound() const { return H_; }
  const Weight& base() const { return base_; }
  void set_base(Weight base) { base_ = std::move(base); }

  const std::map<RootVector, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const RootVector& beta) const;
  BigInt constant_term() const { return coefficient(RootVector(rank_)); }

  /// Adds c * e^{-beta}; terms beyond the height bound are dropped.
  void add_term(const RootVector& beta, const BigInt& c);

  CharSeries truncated(int height_bound) const;
  CharSeries negated() const;

  friend bool operator==(const CharSeries&, const CharSeries&) = default;

 private:
  std::size_t rank_ = 0;
  int H_ = 0;
  Weight base_;
  std::map<RootVector, BigInt> terms_;
};

CharSeries add(const CharSeries& a, const CharSeries& b);
CharSeries subtract(const CharSeries& a, const CharSeries& b);
/// Truncated convolution; base exponents add.
CharSeries mul(const CharSeries& a, const CharSeries& b);
/// Multiplicative inverse; requires constant term +-1.
CharSeries invert(const CharSeries& a);

/// (1 + sign e^{-alpha})^{exponent_sign * m}, truncated at H.
CharSeries binomial_factor(const RootVector& alpha, const BigInt& m, int sign,
                           int exponent_sign, int H);

/// prod_{even alpha} (1 - e^{-alpha})^{m_alpha} / prod_{odd alpha} (1 + e^{-alpha})^{m_alpha}
CharSeries denominator_R(const OddCartanDatum& datum, const RootTable& table, int H);

/// e^lambda / R
CharSeries verma_character(const OddCartanDatum& datum, const RootTable& table,
                           const Weight& lambda, int H);

}  // namespace bbsuper
