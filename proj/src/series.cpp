#include "bbsuper/series.hpp"

#include "bbsuper/error.hpp"

namespace bbsuper {

CharSeries::CharSeries(std::size_t rank, int height_bound)
    : CharSeries(rank, height_bound, Weight::zero(rank)) {}

CharSeries::CharSeries(std::size_t rank, int height_bound, Weight base)
    : rank_(rank), H_(height_bound), base_(std::move(base)) {
  if (height_bound < 0) throw Error(ErrorKind::HeightMismatch, "negative height bound");
}

CharSeries CharSeries::unit(std::size_t rank, int height_bound) {
  CharSeries s(rank, height_bound);
  s.add_term(RootVector(rank), 1);
  return s;
}

BigInt CharSeries::coefficient(const RootVector& beta) const {
  auto it = terms_.find(beta);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void CharSeries::add_term(const RootVector& beta, const BigInt& c) {
  if (beta.height() > H_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(beta, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CharSeries CharSeries::truncated(int height_bound) const {
  CharSeries out(rank_, height_bound, base_);
  for (const auto& [beta, c] : terms_)
    if (beta.height() <= height_bound) out.terms_.emplace(beta, c);
  return out;
}

CharSeries CharSeries::negated() const {
  CharSeries out(*this);
  for (auto& [beta, c] : out.terms_) c = -c;
  return out;
}

namespace {

void require_compatible(const CharSeries& a, const CharSeries& b) {
  if (a.height_bound() != b.height_bound())
    throw Error(ErrorKind::HeightMismatch, "series truncated at H=" +
                                               std::to_string(a.height_bound()) + " and H=" +
                                               std::to_string(b.height_bound()));
  if (a.rank() != b.rank()) throw Error(ErrorKind::ShapeMismatch, "series of different rank");
}

}  // namespace

CharSeries add(const CharSeries& a, const CharSeries& b) {
  require_compatible(a, b);
  CharSeries out(a);
  for (const auto& [beta, c] : b.terms()) out.add_term(beta, c);
  return out;
}

CharSeries subtract(const CharSeries& a, const CharSeries& b) { return add(a, b.negated()); }

CharSeries mul(const CharSeries& a, const CharSeries& b) {
  require_compatible(a, b);
  CharSeries out(a.rank(), a.height_bound(), a.base() + b.base());
  const int H = a.height_bound();
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      if (x.height() + y.height() > H) continue;
      out.add_term(x + y, cx * cy);
    }
  return out;
}

CharSeries invert(const CharSeries& a) {
  const BigInt c0 = a.constant_term();
  if (c0 != 1 && c0 != -1)
    throw Error(ErrorKind::NonUnitConstantTerm, "constant term " + c0.get_str() + " is not +-1");

  CharSeries out(a.rank(), a.height_bound(), a.base().rank() ? a.base().scaled(-1) : a.base());
  std::map<RootVector, BigInt> b;
  for (const auto& beta : cone_vectors(a.rank(), a.height_bound())) {
    if (beta.is_zero()) {
      b.emplace(beta, c0);
      continue;
    }
    BigInt acc = 0;
    for (const auto& [gamma, cg] : a.terms()) {
      if (gamma.is_zero() || gamma.height() > beta.height()) continue;
      auto rest = beta.minus(gamma);
      if (!rest) continue;
      auto it = b.find(*rest);
      if (it != b.end()) acc += cg * it->second;
    }
    if (acc != 0) b.emplace(beta, -c0 * acc);
  }
  for (const auto& [beta, c] : b) out.add_term(beta, c);
  return out;
}

CharSeries binomial_factor(const RootVector& alpha, const BigInt& m, int sign, int exponent_sign,
                           int H) {
  if (alpha.is_zero()) throw Error(ErrorKind::ShapeMismatch, "binomial factor of the zero root");
  CharSeries out(alpha.rank(), H);
  const BigInt N = exponent_sign * m;
  BigInt coeff = 1;  // binom(N, k) * sign^k
  RootVector power(alpha.rank());
  for (int k = 0; power.height() <= H; ++k) {
    out.add_term(power, coeff);
    coeff = coeff * (N - k) * sign;
    coeff /= (k + 1);  // exact: generalized binomial coefficients are integers
    if (coeff == 0) break;
    power = power + alpha;
  }
  return out;
}

CharSeries denominator_R(const OddCartanDatum& datum, const RootTable& table, int H) {
  if (table.H < H)
    throw Error(ErrorKind::IncompleteRootTable, "root table covers height " +
                                                    std::to_string(table.H) + " < " +
                                                    std::to_string(H));
  CharSeries R = CharSeries::unit(datum.rank(), H);
  for (const auto& [beta, entry] : table.entries) {
    if (beta.height() > H || entry.multiplicity == 0) continue;
    if (entry.parity == Parity::Even)
      R = mul(R, binomial_factor(beta, entry.multiplicity, -1, +1, H));
    else
      R = mul(R, binomial_factor(beta, entry.multiplicity, +1, -1, H));
  }
  return R;
}

CharSeries verma_character(const OddCartanDatum& datum, const RootTable& table,
                           const Weight& lambda, int H) {
  CharSeries ch = invert(denominator_R(datum, table, H));
  ch.set_base(lambda);
  return ch;
}

}  // namespace bbsuper
