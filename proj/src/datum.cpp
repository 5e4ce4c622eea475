#include "bbsuper/datum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bbsuper/error.hpp"

namespace bbsuper {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadDiagonal: return "BadDiagonal";
    case ErrorKind::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::OddReParity: return "OddReParity";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ImaginaryIndexReflection: return "ImaginaryIndexReflection";
    case ErrorKind::HeightMismatch: return "HeightMismatch";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::IncompleteRootTable: return "IncompleteRootTable";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::BadGeneratorIndex: return "BadGeneratorIndex";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// RootVector

RootVector::RootVector(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  for (int c : coeffs_) {
    if (c < 0) throw Error(ErrorKind::ShapeMismatch, "negative coefficient in Q+ element");
    height_ += c;
  }
}

RootVector RootVector::simple(std::size_t rank, std::size_t i, int multiple) {
  RootVector v(rank);
  v.coeffs_[i] = multiple;
  v.height_ = multiple;
  return v;
}

RootVector RootVector::operator+(const RootVector& other) const {
  RootVector out(*this);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  out.height_ += other.height_;
  return out;
}

std::optional<RootVector> RootVector::minus(const RootVector& other) const {
  RootVector out(*this);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] -= other.coeffs_[i];
    if (out.coeffs_[i] < 0) return std::nullopt;
  }
  out.height_ -= other.height_;
  return out;
}

bool RootVector::below(const RootVector& other) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] > other.coeffs_[i]) return false;
  return true;
}

RootCombination RootVector::combination() const {
  return RootCombination(coeffs_.begin(), coeffs_.end());
}

std::optional<RootVector> RootVector::from_combination(const RootCombination& c) {
  std::vector<int> coeffs;
  coeffs.reserve(c.size());
  for (auto x : c) {
    if (x < 0) return std::nullopt;
    coeffs.push_back(static_cast<int>(x));
  }
  return RootVector(std::move(coeffs));
}

std::strong_ordering operator<=>(const RootVector& a, const RootVector& b) {
  if (auto c = a.height_ <=> b.height_; c != 0) return c;
  return a.coeffs_ <=> b.coeffs_;
}

std::string RootVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ']';
  return os.str();
}

namespace {

void fill_cone(std::vector<int>& current, std::size_t pos, int remaining,
               std::vector<RootVector>& out) {
  if (pos + 1 == current.size()) {
    for (int c = 0; c <= remaining; ++c) {
      current[pos] = c;
      out.emplace_back(current);
    }
    current[pos] = 0;
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    current[pos] = c;
    fill_cone(current, pos + 1, remaining - c, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<RootVector> cone_vectors(std::size_t rank, int max_height) {
  std::vector<RootVector> out;
  if (max_height < 0) return out;
  if (rank == 0) {
    out.emplace_back(0);
    return out;
  }
  std::vector<int> current(rank, 0);
  fill_cone(current, 0, max_height, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Weight

Weight Weight::zero(std::size_t rank) {
  return Weight{std::vector<Rational>(rank), std::vector<Rational>(rank),
                std::vector<Rational>(rank)};
}

Weight Weight::fundamental_weight(std::size_t rank, std::size_t i, const Rational& multiple) {
  Weight w = zero(rank);
  w.fundamental[i] = multiple;
  return w;
}

Weight Weight::from_root(const RootCombination& beta) {
  Weight w = zero(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) w.root[i] = Rational(static_cast<long>(beta[i]));
  return w;
}

Weight Weight::from_root(const RootVector& beta) { return from_root(beta.combination()); }

Weight Weight::operator+(const Weight& other) const {
  Weight out(*this);
  for (std::size_t i = 0; i < rank(); ++i) {
    out.fundamental[i] += other.fundamental[i];
    out.aux[i] += other.aux[i];
    out.root[i] += other.root[i];
  }
  return out;
}

Weight Weight::operator-(const Weight& other) const { return *this + other.scaled(-1); }

Weight Weight::scaled(const Rational& factor) const {
  Weight out(*this);
  for (std::size_t i = 0; i < rank(); ++i) {
    out.fundamental[i] *= factor;
    out.aux[i] *= factor;
    out.root[i] *= factor;
  }
  return out;
}

// ---------------------------------------------------------------------------
// validation

OddCartanDatum validate_datum(const std::vector<std::vector<int>>& A, const std::vector<int>& D,
                              const std::vector<std::size_t>& odd) {
  const std::size_t n = A.size();
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "empty index set");
  for (const auto& row : A)
    if (row.size() != n) throw Error(ErrorKind::ShapeMismatch, "matrix A is not square");
  if (D.size() != n) throw Error(ErrorKind::ShapeMismatch, "symmetrizer length differs from rank");

  for (std::size_t i = 0; i < n; ++i) {
    const int aii = A[i][i];
    if (aii > 2 || aii % 2 != 0)
      throw Error(ErrorKind::BadDiagonal, "a_" + std::to_string(i + 1) + std::to_string(i + 1) +
                                              " = " + std::to_string(aii) +
                                              " is not one of 2, 0, -2, -4, ...");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && A[i][j] > 0)
        throw Error(ErrorKind::PositiveOffDiagonal,
                    "a_" + std::to_string(i + 1) + "," + std::to_string(j + 1) + " > 0");
  for (std::size_t i = 0; i < n; ++i)
    if (D[i] <= 0)
      throw Error(ErrorKind::NotSymmetrizable, "d_" + std::to_string(i + 1) + " is not positive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (static_cast<long long>(D[i]) * A[i][j] != static_cast<long long>(D[j]) * A[j][i])
        throw Error(ErrorKind::NotSymmetrizable, "DA is not symmetric at (" +
                                                     std::to_string(i + 1) + "," +
                                                     std::to_string(j + 1) + ")");

  std::vector<bool> mask(n, false);
  for (auto i : odd) {
    if (i >= n) throw Error(ErrorKind::ShapeMismatch, "odd index out of range");
    mask[i] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!mask[i] || A[i][i] != 2) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (A[i][j] % 2 != 0)
        throw Error(ErrorKind::OddReParity,
                    "index " + std::to_string(i + 1) + " is real and odd but a_" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) + " = " +
                        std::to_string(A[i][j]) + " is odd");
  }

  OddCartanDatum datum;
  datum.matrix_.index_count = n;
  datum.matrix_.symmetrizer = D;
  datum.matrix_.entries.reserve(n * n);
  for (const auto& row : A) datum.matrix_.entries.insert(datum.matrix_.entries.end(), row.begin(), row.end());
  datum.odd_mask_ = mask;
  for (std::size_t i = 0; i < n; ++i) {
    (A[i][i] == 2 ? datum.re_ : datum.im_).push_back(i);
    if (A[i][i] == 0) datum.iso_.push_back(i);
    (mask[i] ? datum.odd_ : datum.even_).push_back(i);
  }
  return datum;
}

// ---------------------------------------------------------------------------
// pairings and forms

Rational pairing(const OddCartanDatum& datum, std::size_t i, const Weight& lambda) {
  Rational value = lambda.fundamental[i];
  for (std::size_t j = 0; j < datum.rank(); ++j)
    if (lambda.root[j] != 0) value += datum.a(i, j) * lambda.root[j];
  return value;
}

std::int64_t pairing(const OddCartanDatum& datum, std::size_t i, const RootCombination& beta) {
  std::int64_t value = 0;
  for (std::size_t j = 0; j < datum.rank(); ++j) value += datum.a(i, j) * beta[j];
  return value;
}

Rational bilinear_qq(const OddCartanDatum& datum, const RootCombination& beta,
                     const RootCombination& gamma) {
  BigInt total = 0;
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    if (beta[i] == 0) continue;
    BigInt row = 0;
    for (std::size_t j = 0; j < datum.rank(); ++j)
      row += BigInt(static_cast<long>(datum.a(i, j))) * static_cast<long>(gamma[j]);
    total += row * datum.d(i) * static_cast<long>(beta[i]);
  }
  return Rational(total);
}

Rational bilinear_q_weight(const OddCartanDatum& datum, const RootCombination& beta,
                           const Weight& lambda) {
  Rational total = 0;
  for (std::size_t i = 0; i < datum.rank(); ++i)
    if (beta[i] != 0) total += pairing(datum, i, lambda) * datum.d(i) * static_cast<long>(beta[i]);
  return total;
}

Weight reflect(const OddCartanDatum& datum, std::size_t i, const Weight& lambda) {
  if (!datum.is_real(i))
    throw Error(ErrorKind::ImaginaryIndexReflection,
                "no simple reflection for imaginary index " + std::to_string(i + 1));
  Weight out(lambda);
  out.root[i] -= pairing(datum, i, lambda);
  return out;
}

Weight canonical_rho(const OddCartanDatum& datum) {
  Weight rho = Weight::zero(datum.rank());
  for (std::size_t i = 0; i < datum.rank(); ++i) rho.fundamental[i] = datum.a(i, i) / 2;
  return rho;
}

bool is_dominant_integral(const OddCartanDatum& datum, const Weight& lambda) {
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    const Rational p = pairing(datum, i, lambda);
    if (p < 0) return false;
    if (datum.is_real(i)) {
      if (p.get_den() != 1) return false;
      if (datum.is_odd(i) && mpz_even_p(p.get_num().get_mpz_t()) == 0) return false;
    }
  }
  return true;
}

Parity parity_of(const OddCartanDatum& datum, const RootVector& beta) {
  long count = 0;
  for (auto i : datum.odd_indices()) count += beta[i];
  return (count % 2) ? Parity::Odd : Parity::Even;
}

std::optional<RootCombination> root_difference(const OddCartanDatum& datum, const Weight& lambda,
                                               const Weight& mu) {
  // In Lambda/delta coordinates alpha_j = sum_i a_ij Lambda_i + delta_j, so a
  // difference (L, Dl, Al) equals the root combination x iff x = Dl + Al and
  // L = A * Dl.
  const Weight diff = lambda - mu;
  const std::size_t n = datum.rank();
  RootCombination out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational expected = 0;
    for (std::size_t j = 0; j < n; ++j) expected += datum.a(i, j) * diff.aux[j];
    if (expected != diff.fundamental[i]) return std::nullopt;
    const Rational x = diff.aux[i] + diff.root[i];
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) return std::nullopt;
    out[i] = x.get_num().get_si();
  }
  return out;
}

}  // namespace bbsuper
