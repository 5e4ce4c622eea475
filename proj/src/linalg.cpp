#include "bbsuper/linalg.hpp"

#include <algorithm>
#include <utility>

namespace bbsuper {

std::size_t rank(Matrix<Rational> m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(r, c));
    for (std::size_t row = r + 1; row < m.rows(); ++row) {
      if (m(row, col) == 0) continue;
      const Rational factor = m(row, col) / m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(row, c) -= factor * m(r, c);
    }
    ++r;
  }
  return r;
}

std::size_t bareiss_rank(Matrix<Poly> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Poly previous;
  bool have_previous = false;
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    // Full pivoting on the smallest nonzero entry keeps intermediate minors small.
    std::size_t pr = rows, pc = cols;
    std::size_t best = 0;
    for (std::size_t r = k; r < rows; ++r)
      for (std::size_t c = k; c < cols; ++c) {
        const auto& e = m(r, c);
        if (e.is_zero()) continue;
        const std::size_t size = e.terms().size() * 64 + static_cast<std::size_t>(e.total_degree());
        if (pr == rows || size < best) {
          pr = r;
          pc = c;
          best = size;
        }
      }
    if (pr == rows) break;
    if (pr != k)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pr, c), m(k, c));
    if (pc != k)
      for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, pc), m(r, k));

    for (std::size_t r = k + 1; r < rows; ++r) {
      for (std::size_t c = k + 1; c < cols; ++c) {
        Poly value = m(k, k) * m(r, c) - m(r, k) * m(k, c);
        m(r, c) = have_previous ? value.exact_div(previous) : std::move(value);
      }
      m(r, k) = Poly(m(r, k).nvars());
    }
    previous = m(k, k);
    have_previous = true;
  }
  return k;
}

std::size_t symbolic_rank(const Matrix<Poly>& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  std::size_t nvars = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) nvars = std::max(nvars, m(r, c).nvars());

  // Distinct primes as coordinates avoid the small integers where Gram
  // determinants typically vanish.
  static constexpr long kPoint[] = {1009, 2003, 3001, 4001, 5003, 6007, 7001, 8009};
  std::vector<Rational> point(nvars);
  for (std::size_t k = 0; k < nvars; ++k) point[k] = kPoint[k % 8] + 97 * static_cast<long>(k / 8);
  Matrix<Rational> special(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) special(r, c) = m(r, c).evaluate(point);
  if (rank(std::move(special)) == full) return full;
  return bareiss_rank(m);
}

}  // namespace bbsuper
