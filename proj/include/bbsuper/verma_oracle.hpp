#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bbsuper/datum.hpp"
#include "bbsuper/linalg.hpp"
#include "bbsuper/poly.hpp"

namespace bbsuper {

/// Generator label (i, l) of f_{il}; l == 1 whenever i is real.
struct Letter {
  std::size_t index = 0;
  int level = 1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct FMonomial {
  Word factors;
  RootVector degree;
  Parity parity = Parity::Even;

  friend bool operator==(const FMonomial& a, const FMonomial& b) { return a.factors == b.factors; }
};

FMonomial make_monomial(const OddCartanDatum& datum, Word factors);

/// Every ordered word in the letters f_{il} whose degrees sum to beta.
std::vector<FMonomial> enumerate_f_monomials(const OddCartanDatum& datum, const RootVector& beta);

template <class Scalar>
using LinearCombination = std::vector<std::pair<FMonomial, Scalar>>;

/// e_{il} f_{j1} ... f_{jr} v_lambda expanded back into f-monomials. The
/// coefficient of each term is l <h_i, lambda - (degree of the tail to its
/// right)> times the super sign of moving e_{il} past the factors on its left.
LinearCombination<Rational> lower_with_e(const OddCartanDatum& datum, std::size_t i, int l,
                                         const FMonomial& word, const Weight& lambda);
/// Same with <h_i, lambda> replaced by the indeterminate t_i.
LinearCombination<Poly> lower_with_e_symbolic(const OddCartanDatum& datum, std::size_t i, int l,
                                              const FMonomial& word);

template <class Scalar>
struct GramCell {
  RootVector beta;
  std::vector<FMonomial> monomials;
  Matrix<Scalar> gram;  // gram(a, b): coefficient of v_lambda in e-word(m_a) m_b v_lambda
};

/// Resource limits for the oracle; beyond them a cell is Unreachable.
struct OracleCaps {
  int max_height = 6;
  int max_word_length = 8;

  /// BBSUPER_CAP="H" or "H,L" overrides the defaults.
  static OracleCaps from_env();
};

/// Memoizing builder of Gram cells over one coefficient ring. A cell at
/// degree beta is assembled from cells at beta - deg(letter) by peeling the
/// first letter of each row word.
template <class Scalar>
class GramSystem {
 public:
  using Pairing = std::function<Scalar(std::size_t i, const RootVector& tail)>;
  using Constant = std::function<Scalar(long)>;

  GramSystem(const OddCartanDatum& datum, Pairing pairing, Constant constant, OracleCaps caps);

  const GramCell<Scalar>& cell(const RootVector& beta);
  std::size_t dim(const RootVector& beta);

  /// G c == 0 for the coefficient vector of `element` over cell(beta).monomials.
  bool in_kernel(const RootVector& beta, const std::map<Word, BigInt>& element);

  const OracleCaps& caps() const { return caps_; }

 private:
  const GramCell<Scalar>& build(const RootVector& beta);

  const OddCartanDatum& datum_;
  Pairing pairing_;
  Constant constant_;
  OracleCaps caps_;
  std::map<RootVector, GramCell<Scalar>> cells_;
  std::map<RootVector, std::map<Word, std::size_t>> index_;
  std::map<RootVector, std::size_t> ranks_;
};

using NumericGram = GramSystem<Rational>;
using SymbolicGram = GramSystem<Poly>;

/// Numeric system for a concrete highest weight lambda.
NumericGram numeric_gram(const OddCartanDatum& datum, const Weight& lambda, OracleCaps caps = {});
/// Symbolic system with <h_i, lambda> = t_i.
SymbolicGram symbolic_gram(const OddCartanDatum& datum, OracleCaps caps = {});

GramCell<Rational> gram_matrix(const OddCartanDatum& datum, const Weight& lambda,
                               const RootVector& beta, OracleCaps caps = {});
GramCell<Poly> gram_matrix_symbolic(const OddCartanDatum& datum, const RootVector& beta,
                                    OracleCaps caps = {});

/// dim V(lambda)_mu as the rank of the Gram cell at lambda - mu.
std::size_t irreducible_dim(const OddCartanDatum& datum, const Weight& lambda, const Weight& mu,
                            OracleCaps caps = {});

struct OracleRow {
  RootVector mu_offset;
  std::size_t dim = 0;
};

/// Dimensions for every beta with ht(beta) <= H, graded-lex sorted. Ranks of
/// distinct cells are computed on `jobs` threads.
std::vector<OracleRow> oracle_table(const OddCartanDatum& datum, const Weight& lambda, int H,
                                    OracleCaps caps = {}, unsigned jobs = 1);
/// Generic-weight variant: graded dimensions of U(g^-).
std::vector<OracleRow> symbolic_oracle_table(const OddCartanDatum& datum, int H,
                                             OracleCaps caps = {}, unsigned jobs = 1);

/// Element of the free algebra on the f_{il}, homogeneous in degree and parity.
struct RelationElement {
  std::string label;
  RootVector degree;
  Parity parity = Parity::Even;
  std::map<Word, BigInt> terms;
};

/// (ad f_i)^{1 - l a_ij}(f_{jl}) for real i and [f_{il}, f_{jk}] for a_ij = 0,
/// restricted to degrees of height <= max_height. Zero elements are skipped.
std::vector<RelationElement> relation_elements(const OddCartanDatum& datum, int max_height);

}  // namespace bbsuper
