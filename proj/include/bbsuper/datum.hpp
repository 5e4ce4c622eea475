#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bbsuper {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Integer combination of simple roots; entries may be negative.
using RootCombination = std::vector<std::int64_t>;

enum class Parity { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}

/// Element of Q+ written over the simple roots. Ordered graded-lexicographically
/// (height first, then coefficients), which is the canonical order used for
/// every serialized listing.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::size_t rank) : coeffs_(rank, 0) {}
  explicit RootVector(std::vector<int> coeffs);

  static RootVector simple(std::size_t rank, std::size_t i, int multiple = 1);

  std::size_t rank() const { return coeffs_.size(); }
  int operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const int> coeffs() const { return coeffs_; }
  int height() const { return height_; }
  bool is_zero() const { return height_ == 0; }

  RootVector operator+(const RootVector& other) const;
  /// this - other, or nullopt when the difference leaves Q+.
  std::optional<RootVector> minus(const RootVector& other) const;
  /// Componentwise this <= other.
  bool below(const RootVector& other) const;

  RootCombination combination() const;
  /// Accepts a combination only if every entry is nonnegative.
  static std::optional<RootVector> from_combination(const RootCombination& c);

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend std::strong_ordering operator<=>(const RootVector& a, const RootVector& b);

  std::string to_string() const;

 private:
  std::vector<int> coeffs_;
  int height_ = 0;
};

/// Every element of Q+ of height at most `max_height`, graded-lex sorted.
std::vector<RootVector> cone_vectors(std::size_t rank, int max_height);

/// Weight in the realization P = span{Lambda_i} + span{delta_i}, with the
/// simple roots kept as a separate coordinate block:
///   alpha_j = sum_i a_ij Lambda_i + delta_j.
/// <h_i, Lambda_j> = delta_ij, <h_i, delta_j> = 0, <h_i, alpha_j> = a_ij.
struct Weight {
  std::vector<Rational> fundamental;
  std::vector<Rational> aux;
  std::vector<Rational> root;

  static Weight zero(std::size_t rank);
  static Weight fundamental_weight(std::size_t rank, std::size_t i,
                                   const Rational& multiple = 1);
  static Weight from_root(const RootCombination& beta);
  static Weight from_root(const RootVector& beta);

  std::size_t rank() const { return fundamental.size(); }

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight scaled(const Rational& factor) const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

struct BorcherdsCartanMatrix {
  std::size_t index_count = 0;
  std::vector<int> entries;      // row-major a_ij
  std::vector<int> symmetrizer;  // d_i

  int operator()(std::size_t i, std::size_t j) const {
    return entries[i * index_count + j];
  }
};

/// Validated odd Borcherds-Cartan datum. Only obtainable from
/// validate_datum; immutable afterwards.
class OddCartanDatum {
 public:
  std::size_t rank() const { return matrix_.index_count; }
  const BorcherdsCartanMatrix& matrix() const { return matrix_; }
  int a(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  int d(std::size_t i) const { return matrix_.symmetrizer[i]; }

  bool is_real(std::size_t i) const { return a(i, i) == 2; }
  bool is_imaginary(std::size_t i) const { return a(i, i) <= 0; }
  bool is_isotropic(std::size_t i) const { return a(i, i) == 0; }
  bool is_odd(std::size_t i) const { return odd_mask_[i]; }
  Parity parity(std::size_t i) const { return is_odd(i) ? Parity::Odd : Parity::Even; }

  const std::vector<std::size_t>& re_indices() const { return re_; }
  const std::vector<std::size_t>& im_indices() const { return im_; }
  const std::vector<std::size_t>& iso_indices() const { return iso_; }
  const std::vector<std::size_t>& odd_indices() const { return odd_; }
  const std::vector<std::size_t>& even_indices() const { return even_; }

 private:
  friend OddCartanDatum validate_datum(const std::vector<std::vector<int>>&,
                                       const std::vector<int>&,
                                       const std::vector<std::size_t>&);
  BorcherdsCartanMatrix matrix_;
  std::vector<bool> odd_mask_;
  std::vector<std::size_t> re_, im_, iso_, odd_, even_;
};

/// `odd` holds 0-based indices. Throws Error naming the violated condition.
OddCartanDatum validate_datum(const std::vector<std::vector<int>>& A,
                              const std::vector<int>& D,
                              const std::vector<std::size_t>& odd);

/// <h_i, lambda>
Rational pairing(const OddCartanDatum& datum, std::size_t i, const Weight& lambda);
/// <h_i, beta> = sum_j a_ij beta_j
std::int64_t pairing(const OddCartanDatum& datum, std::size_t i, const RootCombination& beta);

/// (beta, gamma) = sum_ij beta_i gamma_j d_i a_ij
Rational bilinear_qq(const OddCartanDatum& datum, const RootCombination& beta,
                     const RootCombination& gamma);
/// (beta, lambda) = sum_i beta_i d_i <h_i, lambda>
Rational bilinear_q_weight(const OddCartanDatum& datum, const RootCombination& beta,
                           const Weight& lambda);

/// r_i(lambda) = lambda - <h_i, lambda> alpha_i; i must be real.
Weight reflect(const OddCartanDatum& datum, std::size_t i, const Weight& lambda);

/// rho = sum_i (a_ii / 2) Lambda_i
Weight canonical_rho(const OddCartanDatum& datum);

bool is_dominant_integral(const OddCartanDatum& datum, const Weight& lambda);

Parity parity_of(const OddCartanDatum& datum, const RootVector& beta);

/// lambda - mu as an integer root combination when it lies in Q; compares
/// the functionals, so differing coordinate presentations are handled.
std::optional<RootCombination> root_difference(const OddCartanDatum& datum,
                                               const Weight& lambda, const Weight& mu);

}  // namespace bbsuper
