// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "bbsuper/charformula.hpp"
#include "bbsuper/roots.hpp"
#include "bbsuper/verma_oracle.hpp"
#include "support.hpp"

using namespace bbsuper;
using namespace bbsuper::testing;

namespace {

struct Check {
  bool ok = true;
  long assertions = 0;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    ++assertions;
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

const OracleCaps kWide{16, 16};

CharacterResult character(const OddCartanDatum& d, const Weight& lambda, int H) {
  return irreducible_character(d, solve_multiplicities(d, H), lambda, H);
}

void expect_oracle_match(Check& c, const OddCartanDatum& d, const Weight& lambda, int H,
                         const CharSeries& ch, OracleCaps caps = {}) {
  for (const auto& row : oracle_table(d, lambda, H, caps))
    c.expect(ch.coefficient(row.mu_offset) == row.dim, "oracle mismatch at " + row.mu_offset.to_string());
}

std::vector<long> expected_rank1(int H, const std::function<long(int)>& f) {
  std::vector<long> out;
  for (int k = 0; k <= H; ++k) out.push_back(f(k));
  return out;
}

CharSeries pbw_series(const OddCartanDatum& d, int H) {
  return invert(denominator_R(d, solve_multiplicities(d, H), H));
}

// --- criteria -------------------------------------------------------------

void sl2_family(Check& c, int H) {
  for (int m = 0; m <= 5; ++m) {
    const auto ch = character(sl2(), lambda1(m), H).character;
    c.expect(coeffs(ch) == expected_rank1(H, [m](int k) { return k <= m ? 1 : 0; }),
             "sl2 m=" + std::to_string(m));
    expect_oracle_match(c, sl2(), lambda1(m), H, ch, kWide);
  }
}

void osp_family(Check& c, int H) {
  for (int m = 0; m <= 3; ++m) {
    const auto ch = character(osp12(), lambda1(2 * m), H).character;
    c.expect(coeffs(ch) == expected_rank1(H, [m](int k) { return k <= 2 * m ? 1 : 0; }),
             "osp m=" + std::to_string(m));
    expect_oracle_match(c, osp12(), lambda1(2 * m), H, ch, kWide);
  }
}

void even_isotropic(Check& c) {
  const auto table = solve_multiplicities(iso_even(), 10);
  for (int l = 1; l <= 10; ++l) c.expect(table.multiplicity(q(l)) == 1, "m_l != 1");
  c.expect(denominator_residual(iso_even(), table, 10).terms().empty(), "residual");
  c.expect(coeffs(character(iso_even(), Weight::zero(1), 10).character) ==
               expected_rank1(10, [](int k) { return k == 0; }),
           "trivial character");
  const auto ch = character(iso_even(), lambda1(1), 6).character;
  c.expect(coeffs(ch) == std::vector<long>{1, 1, 2, 3, 5, 7, 11}, "partitions");
  expect_oracle_match(c, iso_even(), lambda1(1), 6, ch);
}

void free_imaginary(Check& c) {
  const auto table = solve_multiplicities(neg2(), 8);
  const std::vector<long> want{1, 1, 2, 3, 6, 9, 18, 30};
  for (int N = 1; N <= 8; ++N) {
    c.expect(table.multiplicity(q(N)) == want[N - 1], "m_" + std::to_string(N));
    BigInt sum = 0;
    for (int d = 1; d <= N; ++d)
      if (N % d == 0) sum += d * table.multiplicity(q(d));
    c.expect(sum == (BigInt(1) << N) - 1, "divisor sum N=" + std::to_string(N));
  }
  const auto pbw = pbw_series(neg2(), 5);
  for (const auto& row : symbolic_oracle_table(neg2(), 5))
    c.expect(pbw.coefficient(row.mu_offset) == row.dim, "symbolic rank at " + row.mu_offset.to_string());
}

void odd_isotropic(Check& c) {
  const auto id = orbit_frontier(iso_odd(), Weight::zero(1), 5).at(0);
  c.expect(coeffs(s_lambda_series(iso_odd(), Weight::zero(1), id, 5)) ==
               std::vector<long>{1, -1, 0, -1, 1, -1},
           "S_lambda");
  const auto ch = character(iso_odd(), Weight::zero(1), 6).character;
  c.expect(coeffs(ch) == expected_rank1(6, [](int k) { return k == 0; }), "trivial character");
  expect_oracle_match(c, iso_odd(), Weight::zero(1), 6, ch);
}

void mixed_rank2(Check& c) {
  const Weight lambda = Weight::fundamental_weight(2, 0);
  const auto ch = character(mixed(), lambda, 5).character;
  expect_oracle_match(c, mixed(), lambda, 5, ch);
}

// --- randomized properties --------------------------------------------------

OddCartanDatum random_datum(std::mt19937& rng) {
  const std::size_t n = 1 + rng() % 3;
  std::vector<int> D(n);
  for (auto& d : D) d = 1 + static_cast<int>(rng() % 2);
  std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
  const int diagonals[] = {2, 2, 2, 0, -2, -4};
  for (std::size_t i = 0; i < n; ++i) A[i][i] = diagonals[rng() % 6];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int k = static_cast<int>(rng() % 3);
      const int sym = -k * std::lcm(D[i], D[j]);
      A[i][j] = sym / D[i];
      A[j][i] = sym / D[j];
    }
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() % 2) continue;
    bool parity_ok = true;
    if (A[i][i] == 2)
      for (std::size_t j = 0; j < n; ++j) parity_ok = parity_ok && A[i][j] % 2 == 0;
    if (parity_ok) odd.push_back(i);
  }
  return validate_datum(A, D, odd);
}

Weight random_dominant(std::mt19937& rng, const OddCartanDatum& d) {
  Weight lambda = Weight::zero(d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i) {
    int v = static_cast<int>(rng() % 3);
    if (d.is_real(i) && d.is_odd(i)) v *= 2;
    lambda = lambda + Weight::fundamental_weight(d.rank(), i, v);
  }
  return lambda;
}

void random_properties(Check& c, int seeds) {
  for (int seed = 0; seed < seeds; ++seed) {
    std::mt19937 rng(1000 + seed);
    const auto d = random_datum(rng);
    const int H = 3 + static_cast<int>(rng() % 3);
    const Weight lambda = random_dominant(rng, d);
    const std::string tag = " (seed " + std::to_string(seed) + ")";

    const auto table = solve_multiplicities(d, H);
    c.expect(denominator_residual(d, table, H).terms().empty(), "(a) residual" + tag);

    const auto ch = irreducible_character(d, table, lambda, H).character;
    const auto verma = verma_character(d, table, lambda, H);
    c.expect(ch.constant_term() == 1, "(b) constant term" + tag);
    for (const auto& [beta, coef] : ch.terms()) {
      c.expect(coef >= 0, "(b) negative coefficient" + tag);
      c.expect(coef <= verma.coefficient(beta), "(d) exceeds Verma" + tag);
    }

    for (auto i : d.re_indices())
      for (const auto& beta : cone_vectors(d.rank(), H)) {
        const Rational mu_pairing = pairing(d, i, lambda) - pairing(d, i, beta.combination());
        auto image = beta.combination();
        image[i] += mu_pairing.get_num().get_si();
        const auto reflected = RootVector::from_combination(image);
        if (!reflected || reflected->height() > H) continue;
        c.expect(ch.coefficient(beta) == ch.coefficient(*reflected), "(c) W-invariance" + tag);
      }

    expect_oracle_match(c, d, lambda, std::min(H, 4), ch.truncated(std::min(H, 4)));

    auto gram = numeric_gram(d, lambda);
    for (const auto& r : relation_elements(d, std::min(H, 4)))
      c.expect(gram.in_kernel(r.degree, r.terms), "(e) " + r.label + tag);

    for (std::size_t i = 0; i < d.rank(); ++i) {
      c.expect(casimir_shift(d, i, 1) == 0, "(f) l = 1" + tag);
      if (d.is_isotropic(i))
        for (int l = 1; l <= H; ++l) c.expect(casimir_shift(d, i, l) == 0, "(f) isotropic" + tag);
    }
  }
}

// --- truncation coherence ---------------------------------------------------

void truncation_coherence(Check& c) {
  auto same = [&](const OddCartanDatum& d, const Weight& lambda, int H, const std::string& tag) {
    const auto lo = character(d, lambda, H).character;
    const auto hi = character(d, lambda, H + 3).character;
    c.expect(hi.truncated(H) == lo, "character " + tag);
    const auto t_lo = solve_multiplicities(d, H);
    const auto t_hi = solve_multiplicities(d, H + 3);
    for (const auto& [beta, e] : t_hi.entries)
      if (beta.height() <= H) c.expect(t_lo.entries.count(beta) && t_lo.entries.at(beta) == e, "roots " + tag);
    for (const auto& [beta, e] : t_lo.entries) c.expect(t_hi.entries.count(beta) == 1, "roots " + tag);
  };
  for (int m = 0; m <= 5; ++m) same(sl2(), lambda1(m), 12, "sl2");
  for (int m = 0; m <= 3; ++m) same(osp12(), lambda1(2 * m), 12, "osp");
  same(iso_even(), Weight::zero(1), 10, "iso");
  same(iso_even(), lambda1(1), 6, "iso");
  same(neg2(), Weight::zero(1), 8, "free");
  c.expect(pbw_series(neg2(), 8).truncated(5) == pbw_series(neg2(), 5), "pbw");
  same(iso_odd(), Weight::zero(1), 6, "odd iso");
  same(mixed(), Weight::fundamental_weight(2, 0), 5, "mixed");

  const auto id = orbit_frontier(iso_odd(), Weight::zero(1), 8).at(0);
  c.expect(s_lambda_series(iso_odd(), Weight::zero(1), id, 8).truncated(5) ==
               s_lambda_series(iso_odd(), Weight::zero(1), id, 5),
           "S_lambda");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "sl2 family, H = 12", 1, [](Check& c) { sl2_family(c, 12); }},
      {2, "osp(1|2) family, H = 12", 1, [](Check& c) { osp_family(c, 12); }},
      {3, "rank-1 even isotropic", 5, even_isotropic},
      {4, "rank-1 A = [[-2]]", 30, free_imaginary},
      {5, "rank-1 odd isotropic", 5, odd_isotropic},
      {6, "rank-2 mixed, lambda = Lambda_1, H = 5", 60, mixed_rank2},
      {7, "randomized property suites, 60 seeds", 600, [](Check& c) { random_properties(c, 60); }},
      {8, "truncation coherence at H + 3", 600, truncation_coherence},
  };

  int failures = 0;
  for (const auto& k : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      k.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(secs < k.budget_seconds, "over time budget");
    failures += !check.ok;
    std::printf("criterion %d: %s  %s  (%ld checks, %.3f s)%s%s\n", k.number,
                check.ok ? "PASS" : "FAIL", k.title.c_str(), check.assertions, secs,
                check.ok ? "" : "  ", check.why.str().c_str());
  }
  return failures == 0 ? 0 : 1;
}
