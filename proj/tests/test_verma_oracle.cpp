#include <cstdlib>

#include "bbsuper/error.hpp"
#include "bbsuper/roots.hpp"
#include "bbsuper/verma_oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bbsuper;
using namespace bbsuper::testing;

namespace {

std::vector<std::size_t> dims_along(const OddCartanDatum& d, const Weight& lambda, int K) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= K; ++k) out.push_back(irreducible_dim(d, lambda, lambda - Weight::from_root(q(k))));
  return out;
}

Poly t1() { return Poly::variable(1, 0); }
Poly c(long v) { return Poly::constant(1, v); }

}  // namespace

TEST_CASE("enumerate_f_monomials") {
  CHECK(enumerate_f_monomials(sl2(), q(2)).size() == 1);
  const auto two = enumerate_f_monomials(neg2(), q(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0].factors == Word{{0, 1}, {0, 1}});
  CHECK(two[1].factors == Word{{0, 2}});
  CHECK(enumerate_f_monomials(iso_even(), q(3)).size() == 4);
  CHECK(enumerate_f_monomials(iso_even(), q(0)).size() == 1);
  CHECK(enumerate_f_monomials(a2(), rv({1, 1})).size() == 2);

  const auto m = make_monomial(mixed(), Word{{1, 2}, {0, 1}, {1, 1}});
  CHECK(m.degree == rv({1, 3}));
  CHECK(m.parity == Parity::Even);  // two odd letters
  CHECK(make_monomial(mixed(), Word{{1, 3}, {0, 1}}).parity == Parity::Odd);
}

TEST_CASE("lower_with_e") {
  const auto d = sl2();
  const auto f = make_monomial(d, Word{{0, 1}});
  const auto ff = make_monomial(d, Word{{0, 1}, {0, 1}});

  const auto one = lower_with_e(d, 0, 1, f, lambda1(5));
  REQUIRE(one.size() == 1);
  CHECK(one[0].first.factors.empty());
  CHECK(one[0].second == 5);

  const auto sym = lower_with_e_symbolic(d, 0, 1, ff);
  REQUIRE(sym.size() == 1);
  CHECK(sym[0].first == f);
  CHECK(sym[0].second == t1() + t1() - c(2));

  const auto a = a2();
  CHECK(lower_with_e(a, 0, 1, make_monomial(a, Word{{1, 1}}), Weight::fundamental_weight(2, 1)).empty());

  // odd letters anticommute past e
  const auto o = iso_odd();
  const auto w = make_monomial(o, Word{{0, 1}, {0, 2}});
  const auto lowered = lower_with_e_symbolic(o, 0, 2, w);
  REQUIRE(lowered.size() == 1);
  CHECK(lowered[0].second == -(c(2) * t1()));
}

TEST_CASE("gram_matrix") {
  CHECK(gram_matrix(sl2(), lambda1(2), q(1)).gram == Matrix<Rational>(1, 1, 2));
  CHECK(gram_matrix(sl2(), lambda1(2), q(3)).gram == Matrix<Rational>(1, 1, 0));
  CHECK(gram_matrix(iso_odd(), Weight::zero(1), q(1)).gram == Matrix<Rational>(1, 1, 0));
  const auto cell = gram_matrix(iso_even(), lambda1(1), q(2));
  CHECK(cell.monomials.size() == 2);
  CHECK(rank(cell.gram) == 2);
  const auto sym = gram_matrix_symbolic(sl2(), q(2));
  CHECK(sym.gram(0, 0) == c(2) * t1() * t1() - c(2) * t1());
}

TEST_CASE("irreducible_dim") {
  CHECK(dims_along(sl2(), lambda1(2), 4) == std::vector<std::size_t>{1, 1, 1, 0, 0});
  CHECK(dims_along(osp12(), lambda1(2), 3) == std::vector<std::size_t>{1, 1, 1, 0});
  for (const auto& d : {sl2(), osp12(), iso_odd(), neg2()})
    CHECK(irreducible_dim(d, lambda1(4), lambda1(4)) == 1);
  CHECK(irreducible_dim(sl2(), lambda1(2), lambda1(3)) == 0);
  CHECK(dims_along(iso_even(), Weight::zero(1), 4) == std::vector<std::size_t>{1, 0, 0, 0, 0});
}

TEST_CASE("symbolic ranks equal the PBW dimension") {
  for (const auto& d : {sl2(), osp12(), iso_even(), iso_odd(), neg2(), a2(), mixed()}) {
    const int H = d.rank() == 1 ? 5 : 4;
    const auto pbw = invert(denominator_R(d, solve_multiplicities(d, H), H));
    for (const auto& row : symbolic_oracle_table(d, H)) CHECK(pbw.coefficient(row.mu_offset) == row.dim);
  }
}

TEST_CASE("Bareiss on rank-deficient symbolic matrices") {
  // odd isotropic: U(g^-) at 3 alpha has dimension 2 out of 4 words
  CHECK(symbolic_oracle_table(iso_odd(), 3).back().dim == 2);
  const auto cell = gram_matrix_symbolic(iso_odd(), q(3));
  CHECK(bareiss_rank(cell.gram) == 2);
  CHECK(symbolic_rank(cell.gram) == 2);

  Matrix<Poly> m(3, 3, Poly(1));
  m(0, 0) = t1();
  m(0, 1) = c(1);
  m(1, 0) = t1() * t1();
  m(1, 1) = t1();
  m(2, 2) = t1() - c(1);
  CHECK(bareiss_rank(m) == 2);
  CHECK(symbolic_rank(m) == 2);
  m(1, 2) = c(1);
  m(2, 0) = c(1);  // det = 1
  CHECK(bareiss_rank(m) == 3);
}

TEST_CASE("relations lie in the Gram kernel") {
  const auto d = validate_datum({{2, -1, 0}, {-1, 2, -1}, {0, -2, -2}}, {2, 2, 1}, {});
  const auto relations = relation_elements(d, 4);
  CHECK(!relations.empty());
  auto numeric = numeric_gram(d, Weight::fundamental_weight(3, 0) + Weight::fundamental_weight(3, 2, 3));
  auto symbolic = symbolic_gram(d);
  for (const auto& r : relations) {
    CAPTURE(r.label);
    CHECK(numeric.in_kernel(r.degree, r.terms));
    CHECK(symbolic.in_kernel(r.degree, r.terms));
  }
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(gram_matrix(neg2(), Weight::zero(1), q(7)), Error);
  OracleCaps caps{10, 3};
  CHECK_THROWS_AS(gram_matrix(neg2(), Weight::zero(1), q(4), caps), Error);
  CHECK_NOTHROW(gram_matrix(neg2(), Weight::zero(1), q(3), caps));

  setenv("BBSUPER_CAP", "9,9", 1);
  CHECK(OracleCaps::from_env().max_height == 9);
  CHECK(OracleCaps::from_env().max_word_length == 9);
  setenv("BBSUPER_CAP", "4", 1);
  CHECK(OracleCaps::from_env().max_height == 4);
  CHECK(OracleCaps::from_env().max_word_length == 8);
  unsetenv("BBSUPER_CAP");
  CHECK(OracleCaps::from_env().max_height == 6);
}

TEST_CASE("parallel oracle is deterministic") {
  const auto lambda = Weight::fundamental_weight(2, 0);
  const auto seq = oracle_table(mixed(), lambda, 4, {}, 1);
  const auto par = oracle_table(mixed(), lambda, 4, {}, 3);
  REQUIRE(seq.size() == par.size());
  for (std::size_t k = 0; k < seq.size(); ++k) {
    CHECK(seq[k].mu_offset == par[k].mu_offset);
    CHECK(seq[k].dim == par[k].dim);
  }
}

TEST_CASE("poly arithmetic") {
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  const Poly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.exact_div(x + y) == x - y);
  CHECK(p.total_degree() == 2);
  CHECK_THROWS_AS(p.exact_div(x + Poly::constant(2, 1)), Error);
  const std::vector<Rational> pt{3, 2};
  CHECK(p.evaluate(pt) == 5);
}
