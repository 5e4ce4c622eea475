#include "bbsuper/roots.hpp"

#include "bbsuper/charformula.hpp"
#include "bbsuper/error.hpp"

namespace bbsuper {

RootClass classify(const OddCartanDatum& datum, const RootVector& beta) {
  const auto b = beta.combination();
  return bilinear_qq(datum, b, b) > 0 ? RootClass::Real : RootClass::Imaginary;
}

RootTable solve_multiplicities(const OddCartanDatum& datum, int H, unsigned jobs) {
  const std::size_t n = datum.rank();
  const CharSeries rhs = numerator_series(datum, Weight::zero(n), H, jobs).series;

  RootTable table{n, H, {}};
  CharSeries partial = CharSeries::unit(n, H);  // product over roots found so far
  const auto cone = cone_vectors(n, H);

  for (int h = 1; h <= H; ++h) {
    // A root of height h enters R at height h only through its linear term
    // -m e^{-beta}, whichever parity it has.
    std::vector<std::pair<RootVector, RootEntry>> found;
    for (const auto& beta : cone) {
      if (beta.height() != h) continue;
      const BigInt m = partial.coefficient(beta) - rhs.coefficient(beta);
      if (m < 0)
        throw Error(ErrorKind::NegativeMultiplicity,
                    "root " + beta.to_string() + " solved to multiplicity " + m.get_str());
      if (m == 0) continue;
      found.emplace_back(beta, RootEntry{m, parity_of(datum, beta), classify(datum, beta)});
    }
    for (const auto& [beta, entry] : found) {
      if (entry.parity == Parity::Even)
        partial = mul(partial, binomial_factor(beta, entry.multiplicity, -1, +1, H));
      else
        partial = mul(partial, binomial_factor(beta, entry.multiplicity, +1, -1, H));
      table.entries.emplace(beta, entry);
    }
  }
  return table;
}

CharSeries denominator_residual(const OddCartanDatum& datum, const RootTable& table, int H) {
  const CharSeries rhs = numerator_series(datum, Weight::zero(datum.rank()), H).series;
  return subtract(denominator_R(datum, table, H), rhs);
}

}  // namespace bbsuper
