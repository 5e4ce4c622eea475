#include "bbsuper/charformula.hpp"

#include <algorithm>
#include <future>

#include "bbsuper/error.hpp"

namespace bbsuper {

std::vector<BigInt> euler_phi(int N) {
  CharSeries product = CharSeries::unit(1, N);
  for (int k = 1; k <= N; ++k)
    product = mul(product, binomial_factor(RootVector::simple(1, 0, k), 1, -1, +1, N));
  std::vector<BigInt> out;
  for (int n = 0; n <= N; ++n) out.push_back(product.coefficient(RootVector::simple(1, 0, n)));
  return out;
}

std::vector<BigInt> odd_iso_coeffs(int N) {
  CharSeries distinct = CharSeries::unit(1, N);
  for (int l = 1; l <= N; ++l)
    distinct = mul(distinct, binomial_factor(RootVector::simple(1, 0, l), 1, +1, +1, N));
  const CharSeries inverse = invert(distinct);
  std::vector<BigInt> out;
  for (int n = 0; n <= N; ++n) out.push_back(inverse.coefficient(RootVector::simple(1, 0, n)));
  return out;
}

std::vector<std::size_t> orthogonal_candidates(const OddCartanDatum& datum, const Weight& lambda) {
  std::vector<std::size_t> out;
  for (auto i : datum.im_indices())
    if (pairing(datum, i, lambda) == 0) out.push_back(i);
  return out;
}

namespace {

struct SignTables {
  std::vector<BigInt> phi;
  std::vector<BigInt> c;
};

BigInt sign_with(const OddCartanDatum& datum, std::span<const std::size_t> support,
                 std::span<const int> coefficients, const SignTables& tables) {
  BigInt sign = 1;
  for (std::size_t k = 0; k < support.size(); ++k) {
    const std::size_t i = support[k];
    const int n = coefficients[k];
    if (!datum.is_isotropic(i))
      sign = -sign;
    else if (datum.is_odd(i))
      sign *= tables.c.at(n);
    else
      sign *= tables.phi.at(n);
  }
  return sign;
}

struct SupportSearch {
  const OddCartanDatum& datum;
  const std::vector<std::size_t>& candidates;
  std::span<const int> cost;
  const SignTables& tables;
  std::vector<std::size_t> chosen;
  std::vector<int> coefficients;
  std::vector<OrthogonalSupport> out;

  void emit() {
    RootVector weight(datum.rank());
    for (std::size_t k = 0; k < chosen.size(); ++k)
      weight = weight + RootVector::simple(datum.rank(), chosen[k], coefficients[k]);
    out.push_back(OrthogonalSupport{chosen, coefficients, std::move(weight),
                                    sign_with(datum, chosen, coefficients, tables)});
  }

  void run(std::size_t next, int budget) {
    emit();
    for (std::size_t pos = next; pos < candidates.size(); ++pos) {
      const std::size_t i = candidates[pos];
      bool orthogonal = true;
      for (auto j : chosen)
        if (datum.a(i, j) != 0) orthogonal = false;
      if (!orthogonal) continue;
      for (int n = 1; n * cost[i] <= budget; ++n) {
        chosen.push_back(i);
        coefficients.push_back(n);
        run(pos + 1, budget - n * cost[i]);
        chosen.pop_back();
        coefficients.pop_back();
      }
    }
  }
};

}  // namespace

BigInt support_sign(const OddCartanDatum& datum, std::span<const std::size_t> support,
                    std::span<const int> coefficients) {
  int top = 0;
  for (int n : coefficients) top = std::max(top, n);
  const SignTables tables{euler_phi(top), odd_iso_coeffs(top)};
  return sign_with(datum, support, coefficients, tables);
}

std::vector<OrthogonalSupport> enumerate_supports(const OddCartanDatum& datum,
                                                  const Weight& lambda,
                                                  std::span<const int> cost, int budget) {
  if (budget < 0) return {};
  const auto candidates = orthogonal_candidates(datum, lambda);
  for (auto i : candidates)
    if (cost[i] < 1) throw Error(ErrorKind::ShapeMismatch, "support cost must be positive");
  const SignTables tables{euler_phi(budget), odd_iso_coeffs(budget)};
  SupportSearch search{datum, candidates, cost, tables, {}, {}, {}};
  search.run(0, budget);
  std::sort(search.out.begin(), search.out.end(),
            [](const OrthogonalSupport& a, const OrthogonalSupport& b) { return a.weight < b.weight; });
  return std::move(search.out);
}

std::vector<OrthogonalSupport> enumerate_supports(const OddCartanDatum& datum,
                                                  const Weight& lambda, int H) {
  const std::vector<int> unit_cost(datum.rank(), 1);
  return enumerate_supports(datum, lambda, unit_cost, H);
}

CharSeries s_lambda_series(const OddCartanDatum& datum, const Weight& lambda,
                           const OrbitElement& w, int H) {
  const std::size_t n = datum.rank();
  CharSeries out(n, H);
  const int budget = H - w.defect.height();
  if (budget < 0) return out;

  // w(alpha_i) for imaginary i is alpha_i plus a nonnegative combination of
  // real simple roots, hence in Q+ with height >= 1.
  std::vector<RootVector> images(n, RootVector(n));
  std::vector<int> cost(n, 1);
  for (auto i : orthogonal_candidates(datum, lambda)) {
    auto image = RootVector::from_combination(
        act_on_root(datum, w.word, RootVector::simple(n, i).combination()));
    if (!image) throw Error(ErrorKind::ShapeMismatch, "Weyl image of imaginary root left Q+");
    images[i] = *image;
    cost[i] = image->height();
  }

  for (const auto& s : enumerate_supports(datum, lambda, cost, budget)) {
    if (s.sign_factor == 0) continue;
    RootVector exponent = w.defect;
    for (std::size_t k = 0; k < s.support.size(); ++k)
      for (int rep = 0; rep < s.coefficients[k]; ++rep) exponent = exponent + images[s.support[k]];
    out.add_term(exponent, w.sign * s.sign_factor);
  }
  return out;
}

Numerator numerator_series(const OddCartanDatum& datum, const Weight& lambda, int H,
                           unsigned jobs) {
  const auto orbit = orbit_frontier(datum, lambda, H);
  Numerator result{CharSeries(datum.rank(), H), orbit.size(),
                   enumerate_supports(datum, lambda, H).size()};

  auto partial = [&](std::size_t begin, std::size_t step) {
    CharSeries acc(datum.rank(), H);
    for (std::size_t k = begin; k < orbit.size(); k += step)
      acc = add(acc, s_lambda_series(datum, lambda, orbit[k], H));
    return acc;
  };

  if (jobs <= 1 || orbit.size() < 2) {
    result.series = partial(0, 1);
  } else {
    const std::size_t workers = std::min<std::size_t>(jobs, orbit.size());
    std::vector<std::future<CharSeries>> futures;
    for (std::size_t t = 0; t < workers; ++t)
      futures.push_back(std::async(std::launch::async, partial, t, workers));
    for (auto& f : futures) result.series = add(result.series, f.get());
  }
  return result;
}

CharacterResult irreducible_character(const OddCartanDatum& datum, const RootTable& table,
                                      const Weight& lambda, int H, unsigned jobs) {
  if (!is_dominant_integral(datum, lambda))
    throw Error(ErrorKind::NotDominant, "highest weight is not dominant integral");
  const CharSeries R = denominator_R(datum, table, H);
  Numerator numerator = numerator_series(datum, lambda, H, jobs);

  CharacterResult result;
  result.lambda = lambda;
  result.H = H;
  result.character = mul(numerator.series, invert(R));
  result.diagnostics.orbit_size = numerator.orbit_size;
  result.diagnostics.support_count = numerator.support_count;
  result.diagnostics.numerator_terms = numerator.series.terms().size();
  result.diagnostics.residual_zero = mul(result.character, R) == numerator.series;
  result.character.set_base(lambda);
  return result;
}

Rational casimir_shift(const OddCartanDatum& datum, std::size_t i, int l) {
  if (l < 1 || (datum.is_real(i) && l != 1))
    throw Error(ErrorKind::BadGeneratorIndex,
                "(" + std::to_string(i + 1) + "," + std::to_string(l) + ") is not in I^infinity");
  const auto alpha = RootVector::simple(datum.rank(), i).combination();
  return Rational(static_cast<long>(l) * l - l) * bilinear_qq(datum, alpha, alpha);
}

Rational casimir_gap(const OddCartanDatum& datum, const Weight& lambda, const RootVector& beta) {
  const auto b = beta.combination();
  return -2 * bilinear_q_weight(datum, b, lambda + canonical_rho(datum)) +
         bilinear_qq(datum, b, b);
}

bool is_primitive_candidate(const OddCartanDatum& datum, const Weight& lambda, const Weight& mu) {
  const auto diff = root_difference(datum, lambda, mu);
  if (!diff) return false;
  const auto beta = RootVector::from_combination(*diff);
  if (!beta) return false;
  if (beta->is_zero()) return true;

  const auto candidates = orthogonal_candidates(datum, lambda);
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    if ((*beta)[i] == 0) continue;
    if (std::find(candidates.begin(), candidates.end(), i) == candidates.end()) return false;
    for (auto j : support)
      if (datum.a(i, j) != 0) return false;
    support.push_back(i);
  }
  return true;
}

}  // namespace bbsuper
