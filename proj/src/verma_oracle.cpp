#include "bbsuper/verma_oracle.hpp"

#include <cstdlib>
#include <future>
#include <sstream>
#include <type_traits>

#include "bbsuper/error.hpp"

namespace bbsuper {

namespace {

bool is_zero(const Rational& x) { return x == 0; }
bool is_zero(const Poly& x) { return x.is_zero(); }

RootVector letter_degree(std::size_t rank, const Letter& x) {
  return RootVector::simple(rank, x.index, x.level);
}

void extend_words(const OddCartanDatum& datum, const RootVector& remaining, Word& prefix,
                  std::vector<FMonomial>& out) {
  if (remaining.is_zero()) {
    out.push_back(make_monomial(datum, prefix));
    return;
  }
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    const int top = datum.is_real(i) ? std::min(1, remaining[i]) : remaining[i];
    for (int l = 1; l <= top; ++l) {
      prefix.push_back(Letter{i, l});
      extend_words(datum, *remaining.minus(RootVector::simple(datum.rank(), i, l)), prefix, out);
      prefix.pop_back();
    }
  }
}

/// e_x (y_1 ... y_r) v: for every position p with y_p == f_x, drop y_p with
/// coefficient l <h_i, lambda - deg(y_{p+1} ... y_r)> and sign
/// (-1)^{|x| (|y_1| + ... + |y_{p-1}|)}.
template <class Scalar, class PairingFn, class ConstantFn>
std::map<Word, Scalar> lower_generic(const OddCartanDatum& datum, const Letter& x,
                                     const Word& word, const PairingFn& pairing,
                                     const ConstantFn& constant) {
  const std::size_t n = datum.rank();
  const std::size_t r = word.size();
  std::vector<RootVector> tail(r + 1, RootVector(n));
  for (std::size_t p = r; p-- > 0;) tail[p] = tail[p + 1] + letter_degree(n, word[p]);

  std::map<Word, Scalar> out;
  const bool x_odd = datum.is_odd(x.index);
  bool left_odd = false;
  for (std::size_t p = 0; p < r; ++p) {
    if (word[p] == x) {
      Scalar coef = constant(x.level) * pairing(x.index, tail[p + 1]);
      if (x_odd && left_odd) coef = constant(-1) * coef;
      if (!is_zero(coef)) {
        Word reduced(word.begin(), word.end());
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(p));
        auto [it, inserted] = out.try_emplace(std::move(reduced), coef);
        if (!inserted) {
          it->second = it->second + coef;
          if (is_zero(it->second)) out.erase(it);
        }
      }
    }
    if (datum.is_odd(word[p].index)) left_odd = !left_odd;
  }
  return out;
}

template <class Scalar>
LinearCombination<Scalar> to_combination(const OddCartanDatum& datum,
                                         std::map<Word, Scalar> terms) {
  LinearCombination<Scalar> out;
  for (auto& [w, c] : terms) out.emplace_back(make_monomial(datum, w), std::move(c));
  return out;
}

Rational numeric_pairing(const OddCartanDatum& datum, const std::vector<Rational>& top,
                         std::size_t i, const RootVector& tail) {
  return top[i] - pairing(datum, i, tail.combination());
}

Poly symbolic_pairing(const OddCartanDatum& datum, std::size_t i, const RootVector& tail) {
  return Poly::variable(datum.rank(), i) -
         Poly::constant(datum.rank(), static_cast<long>(pairing(datum, i, tail.combination())));
}

template <class Scalar>
std::vector<std::size_t> parallel_ranks(const std::vector<const GramCell<Scalar>*>& cells,
                                        unsigned jobs) {
  std::vector<std::size_t> out(cells.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t k = begin; k < cells.size(); k += step) {
      if constexpr (std::is_same_v<Scalar, Poly>)
        out[k] = symbolic_rank(cells[k]->gram);
      else
        out[k] = rank(cells[k]->gram);
    }
  };
  if (jobs <= 1) {
    work(0, 1);
  } else {
    std::vector<std::future<void>> futures;
    for (unsigned t = 0; t < jobs; ++t) futures.push_back(std::async(std::launch::async, work, t, jobs));
    for (auto& f : futures) f.get();
  }
  return out;
}

template <class Scalar>
std::vector<OracleRow> table_for(GramSystem<Scalar>& system, std::size_t rank, int H,
                                 unsigned jobs) {
  const auto cone = cone_vectors(rank, H);
  std::vector<const GramCell<Scalar>*> cells;
  for (const auto& beta : cone) cells.push_back(&system.cell(beta));
  const auto ranks = parallel_ranks(cells, jobs);
  std::vector<OracleRow> out;
  for (std::size_t k = 0; k < cone.size(); ++k) out.push_back(OracleRow{cone[k], ranks[k]});
  return out;
}

}  // namespace

FMonomial make_monomial(const OddCartanDatum& datum, Word factors) {
  FMonomial m{std::move(factors), RootVector(datum.rank()), Parity::Even};
  for (const auto& x : m.factors) {
    m.degree = m.degree + letter_degree(datum.rank(), x);
    m.parity = m.parity + datum.parity(x.index);
  }
  return m;
}

std::vector<FMonomial> enumerate_f_monomials(const OddCartanDatum& datum, const RootVector& beta) {
  std::vector<FMonomial> out;
  Word prefix;
  extend_words(datum, beta, prefix, out);
  return out;
}

LinearCombination<Rational> lower_with_e(const OddCartanDatum& datum, std::size_t i, int l,
                                         const FMonomial& word, const Weight& lambda) {
  std::vector<Rational> top(datum.rank());
  for (std::size_t k = 0; k < datum.rank(); ++k) top[k] = pairing(datum, k, lambda);
  auto pair_fn = [&](std::size_t k, const RootVector& tail) {
    return numeric_pairing(datum, top, k, tail);
  };
  auto const_fn = [](long c) { return Rational(c); };
  return to_combination(datum, lower_generic<Rational>(datum, Letter{i, l}, word.factors, pair_fn,
                                                       const_fn));
}

LinearCombination<Poly> lower_with_e_symbolic(const OddCartanDatum& datum, std::size_t i, int l,
                                              const FMonomial& word) {
  auto pair_fn = [&](std::size_t k, const RootVector& tail) {
    return symbolic_pairing(datum, k, tail);
  };
  auto const_fn = [&](long c) { return Poly::constant(datum.rank(), c); };
  return to_combination(datum, lower_generic<Poly>(datum, Letter{i, l}, word.factors, pair_fn,
                                                   const_fn));
}

OracleCaps OracleCaps::from_env() {
  OracleCaps caps;
  const char* raw = std::getenv("BBSUPER_CAP");
  if (raw == nullptr || *raw == '\0') return caps;
  std::istringstream in(raw);
  char comma = 0;
  if (!(in >> caps.max_height))
    throw Error(ErrorKind::Parse, std::string("BBSUPER_CAP must be H or H,L; got ") + raw);
  if (in >> comma) {
    if (comma != ',' || !(in >> caps.max_word_length))
      throw Error(ErrorKind::Parse, std::string("BBSUPER_CAP must be H or H,L; got ") + raw);
  } else {
    caps.max_word_length = std::max(caps.max_word_length, caps.max_height);
  }
  return caps;
}

// ---------------------------------------------------------------------------
// GramSystem

template <class Scalar>
GramSystem<Scalar>::GramSystem(const OddCartanDatum& datum, Pairing pairing, Constant constant,
                               OracleCaps caps)
    : datum_(datum), pairing_(std::move(pairing)), constant_(std::move(constant)), caps_(caps) {}

template <class Scalar>
const GramCell<Scalar>& GramSystem<Scalar>::cell(const RootVector& beta) {
  // Every index has a level-1 letter, so the longest word has length ht(beta).
  if (beta.height() > caps_.max_height || beta.height() > caps_.max_word_length)
    throw Error(ErrorKind::Unreachable,
                "Gram cell " + beta.to_string() + " exceeds the oracle caps (height " +
                    std::to_string(caps_.max_height) + ", word length " +
                    std::to_string(caps_.max_word_length) + ")");
  return build(beta);
}

template <class Scalar>
const GramCell<Scalar>& GramSystem<Scalar>::build(const RootVector& beta) {
  if (auto it = cells_.find(beta); it != cells_.end()) return it->second;

  GramCell<Scalar> out{beta, enumerate_f_monomials(datum_, beta), {}};
  const std::size_t size = out.monomials.size();
  auto& index = index_[beta];
  for (std::size_t k = 0; k < size; ++k) index.emplace(out.monomials[k].factors, k);
  out.gram = Matrix<Scalar>(size, size, constant_(0));

  if (beta.is_zero()) {
    out.gram(0, 0) = constant_(1);
    return cells_.emplace(beta, std::move(out)).first->second;
  }

  std::map<Letter, std::vector<std::vector<std::pair<std::size_t, Scalar>>>> lowered;
  for (std::size_t a = 0; a < size; ++a) {
    const Word& row = out.monomials[a].factors;
    const Letter x = row.front();
    const RootVector below = *beta.minus(letter_degree(datum_.rank(), x));
    const GramCell<Scalar>& sub = build(below);
    const auto& sub_index = index_.at(below);
    const std::size_t row_rest = sub_index.at(Word(row.begin() + 1, row.end()));

    auto [slot, fresh] = lowered.try_emplace(x);
    if (fresh) {
      slot->second.resize(size);
      for (std::size_t b = 0; b < size; ++b)
        for (auto& [w, c] : lower_generic<Scalar>(datum_, x, out.monomials[b].factors, pairing_,
                                                  constant_))
          slot->second[b].emplace_back(sub_index.at(w), std::move(c));
    }
    for (std::size_t b = 0; b < size; ++b) {
      Scalar entry = constant_(0);
      for (const auto& [col, c] : slot->second[b]) {
        const Scalar& g = sub.gram(row_rest, col);
        if (!is_zero(g)) entry = entry + c * g;
      }
      out.gram(a, b) = std::move(entry);
    }
  }
  return cells_.emplace(beta, std::move(out)).first->second;
}

template <class Scalar>
std::size_t GramSystem<Scalar>::dim(const RootVector& beta) {
  if (auto it = ranks_.find(beta); it != ranks_.end()) return it->second;
  const auto& c = cell(beta);
  std::size_t r;
  if constexpr (std::is_same_v<Scalar, Poly>)
    r = symbolic_rank(c.gram);
  else
    r = rank(c.gram);
  ranks_.emplace(beta, r);
  return r;
}

template <class Scalar>
bool GramSystem<Scalar>::in_kernel(const RootVector& beta, const std::map<Word, BigInt>& element) {
  const auto& c = cell(beta);
  const auto& index = index_.at(beta);
  std::vector<std::pair<std::size_t, Scalar>> coeffs;
  for (const auto& [w, k] : element) {
    auto it = index.find(w);
    if (it == index.end())
      throw Error(ErrorKind::ShapeMismatch, "relation term has the wrong degree");
    coeffs.emplace_back(it->second, constant_(k.get_si()));
  }
  for (std::size_t a = 0; a < c.monomials.size(); ++a) {
    Scalar acc = constant_(0);
    for (const auto& [b, k] : coeffs) acc = acc + c.gram(a, b) * k;
    if (!is_zero(acc)) return false;
  }
  return true;
}

template class GramSystem<Rational>;
template class GramSystem<Poly>;

NumericGram numeric_gram(const OddCartanDatum& datum, const Weight& lambda, OracleCaps caps) {
  std::vector<Rational> top(datum.rank());
  for (std::size_t k = 0; k < datum.rank(); ++k) top[k] = pairing(datum, k, lambda);
  return NumericGram(
      datum,
      [&datum, top](std::size_t i, const RootVector& tail) {
        return numeric_pairing(datum, top, i, tail);
      },
      [](long c) { return Rational(c); }, caps);
}

SymbolicGram symbolic_gram(const OddCartanDatum& datum, OracleCaps caps) {
  return SymbolicGram(
      datum, [&datum](std::size_t i, const RootVector& tail) { return symbolic_pairing(datum, i, tail); },
      [n = datum.rank()](long c) { return Poly::constant(n, c); }, caps);
}

GramCell<Rational> gram_matrix(const OddCartanDatum& datum, const Weight& lambda,
                               const RootVector& beta, OracleCaps caps) {
  auto system = numeric_gram(datum, lambda, caps);
  return system.cell(beta);
}

GramCell<Poly> gram_matrix_symbolic(const OddCartanDatum& datum, const RootVector& beta,
                                    OracleCaps caps) {
  auto system = symbolic_gram(datum, caps);
  return system.cell(beta);
}

std::size_t irreducible_dim(const OddCartanDatum& datum, const Weight& lambda, const Weight& mu,
                            OracleCaps caps) {
  const auto diff = root_difference(datum, lambda, mu);
  const auto beta = diff ? RootVector::from_combination(*diff) : std::nullopt;
  if (!beta) return 0;  // mu is not below lambda: not a weight of V(lambda)
  auto system = numeric_gram(datum, lambda, caps);
  return system.dim(*beta);
}

std::vector<OracleRow> oracle_table(const OddCartanDatum& datum, const Weight& lambda, int H,
                                    OracleCaps caps, unsigned jobs) {
  auto system = numeric_gram(datum, lambda, caps);
  return table_for(system, datum.rank(), H, jobs);
}

std::vector<OracleRow> symbolic_oracle_table(const OddCartanDatum& datum, int H, OracleCaps caps,
                                             unsigned jobs) {
  auto system = symbolic_gram(datum, caps);
  return table_for(system, datum.rank(), H, jobs);
}

// ---------------------------------------------------------------------------
// relations

namespace {

using Element = std::map<Word, BigInt>;

void accumulate(Element& into, Word w, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

/// ad_x(y) = x y - (-1)^{|x||y|} y x
Element super_ad(const Letter& x, bool x_odd, const Element& y, bool y_odd) {
  const long sign = (x_odd && y_odd) ? -1 : 1;
  Element out;
  for (const auto& [w, c] : y) {
    Word left{x};
    left.insert(left.end(), w.begin(), w.end());
    accumulate(out, std::move(left), c);
    Word right(w);
    right.push_back(x);
    accumulate(out, std::move(right), -sign * c);
  }
  return out;
}

std::string letter_label(const Letter& x) {
  return "f(" + std::to_string(x.index + 1) + "," + std::to_string(x.level) + ")";
}

}  // namespace

std::vector<RelationElement> relation_elements(const OddCartanDatum& datum, int max_height) {
  const std::size_t n = datum.rank();
  std::vector<RelationElement> out;

  auto letters_of = [&](std::size_t j, int max_level) {
    std::vector<Letter> ls;
    const int top = datum.is_real(j) ? std::min(1, max_level) : max_level;
    for (int l = 1; l <= top; ++l) ls.push_back(Letter{j, l});
    return ls;
  };

  for (auto i : datum.re_indices()) {
    const Letter fi{i, 1};
    const bool i_odd = datum.is_odd(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (const auto& fj : letters_of(j, max_height)) {
        const long power = 1 - static_cast<long>(fj.level) * datum.a(i, j);
        if (power + fj.level > max_height) continue;
        Element element{{Word{fj}, BigInt(1)}};
        bool odd = datum.is_odd(j);
        for (long k = 0; k < power; ++k) {
          element = super_ad(fi, i_odd, element, odd);
          odd = odd != i_odd;
        }
        if (element.empty()) continue;
        out.push_back(RelationElement{
            "serre " + letter_label(fi) + "^" + std::to_string(power) + " " + letter_label(fj),
            RootVector::simple(n, i, static_cast<int>(power)) + RootVector::simple(n, j, fj.level),
            odd ? Parity::Odd : Parity::Even, std::move(element)});
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (datum.a(i, j) != 0) continue;
      for (const auto& x : letters_of(i, max_height))
        for (const auto& y : letters_of(j, max_height)) {
          if (x.level + y.level > max_height) continue;
          if (i == j && y < x) continue;
          Element element = super_ad(x, datum.is_odd(i), Element{{Word{y}, BigInt(1)}},
                                     datum.is_odd(j));
          if (element.empty()) continue;
          const bool odd = datum.is_odd(i) != datum.is_odd(j);
          out.push_back(RelationElement{
              "commute " + letter_label(x) + " " + letter_label(y),
              RootVector::simple(n, i, x.level) + RootVector::simple(n, j, y.level),
              odd ? Parity::Odd : Parity::Even, std::move(element)});
        }
    }
  return out;
}

}  // namespace bbsuper
