#pragma once

#include <span>
#include <vector>

#include "bbsuper/datum.hpp"
#include "bbsuper/root_table.hpp"
#include "bbsuper/series.hpp"
#include "bbsuper/weyl.hpp"

namespace bbsuper {

/// Coefficients of prod_{k>=1} (1 - q^k) through degree N.
std::vector<BigInt> euler_phi(int N);

/// Coefficients of prod_{l>=1} (1 + q^l)^{-1} through degree N; these weight
/// the odd isotropic contributions to the correction sum.
std::vector<BigInt> odd_iso_coeffs(int N);

/// s = sum_{i in T} n_i alpha_i with T a set of imaginary simple roots that are
/// orthogonal to lambda and pairwise orthogonal. Each index carries a single
/// total coefficient n_i >= 1.
struct OrthogonalSupport {
  std::vector<std::size_t> support;
  std::vector<int> coefficients;
  RootVector weight;
  BigInt sign_factor;
};

/// Imaginary indices i with (alpha_i, lambda) = 0.
std::vector<std::size_t> orthogonal_candidates(const OddCartanDatum& datum, const Weight& lambda);

/// Sign factor: -1 per non-isotropic index, phi(n_i) per even isotropic index
/// and c(n_i) per odd isotropic index.
BigInt support_sign(const OddCartanDatum& datum, std::span<const std::size_t> support,
                    std::span<const int> coefficients);

/// All supports with ht(s) <= H, including the empty one; graded-lex by weight.
std::vector<OrthogonalSupport> enumerate_supports(const OddCartanDatum& datum,
                                                  const Weight& lambda, int H);

/// Supports whose cost sum_i n_i cost[i] stays within `budget`. `cost` is
/// indexed by simple root and must be >= 1 on every candidate.
std::vector<OrthogonalSupport> enumerate_supports(const OddCartanDatum& datum,
                                                  const Weight& lambda,
                                                  std::span<const int> cost, int budget);

/// eps(w) e^{w(lambda+rho)} w(S_lambda), divided by e^{lambda+rho} and
/// restricted to exponents of height <= H.
CharSeries s_lambda_series(const OddCartanDatum& datum, const Weight& lambda,
                           const OrbitElement& w, int H);

struct Numerator {
  CharSeries series;
  std::size_t orbit_size = 0;
  std::size_t support_count = 0;
};

/// sum_w eps(w) e^{w(lambda+rho)} w(S_lambda) / e^{lambda+rho}, truncated at H.
/// `jobs` > 1 splits the orbit across threads; the result is independent of it.
Numerator numerator_series(const OddCartanDatum& datum, const Weight& lambda, int H,
                           unsigned jobs = 1);

struct CharacterDiagnostics {
  std::size_t orbit_size = 0;
  std::size_t support_count = 0;
  std::size_t numerator_terms = 0;
  bool residual_zero = false;  // character * R == numerator through H
};

struct CharacterResult {
  Weight lambda;
  int H = 0;
  CharSeries character;  // base exponent lambda
  CharacterDiagnostics diagnostics;
};

CharacterResult irreducible_character(const OddCartanDatum& datum, const RootTable& table,
                                      const Weight& lambda, int H, unsigned jobs = 1);

/// (l^2 - l)(alpha_i, alpha_i): the shift of the Casimir scalar across f_{il}.
Rational casimir_shift(const OddCartanDatum& datum, std::size_t i, int l);

/// (mu + 2rho, mu) - (lambda + 2rho, lambda) for mu = lambda - beta, evaluated
/// as (mu - lambda, mu + lambda + 2rho).
Rational casimir_gap(const OddCartanDatum& datum, const Weight& lambda, const RootVector& beta);

/// True iff lambda - mu is zero or the weight of an orthogonal support for lambda.
bool is_primitive_candidate(const OddCartanDatum& datum, const Weight& lambda, const Weight& mu);

}  // namespace bbsuper
