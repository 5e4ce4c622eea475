#pragma once

#include <vector>

#include "bbsuper/datum.hpp"
#include "bbsuper/series.hpp"

namespace bbsuper::testing {

inline OddCartanDatum sl2() { return validate_datum({{2}}, {1}, {}); }
inline OddCartanDatum osp12() { return validate_datum({{2}}, {1}, {0}); }
inline OddCartanDatum iso_even() { return validate_datum({{0}}, {1}, {}); }
inline OddCartanDatum iso_odd() { return validate_datum({{0}}, {1}, {0}); }
inline OddCartanDatum neg2() { return validate_datum({{-2}}, {1}, {}); }
inline OddCartanDatum a2() { return validate_datum({{2, -1}, {-1, 2}}, {1, 1}, {}); }
inline OddCartanDatum mixed() { return validate_datum({{2, -1}, {-1, 0}}, {1, 1}, {1}); }

inline RootVector q(int k) { return RootVector::simple(1, 0, k); }
inline RootVector rv(std::vector<int> c) { return RootVector(std::move(c)); }

inline Weight lambda1(const Rational& m) { return Weight::fundamental_weight(1, 0, m); }

/// Rank-1 series sum_k c[k] q^k truncated at H.
inline CharSeries rank1(std::vector<long> c, int H) {
  CharSeries s(1, H);
  for (std::size_t k = 0; k < c.size(); ++k) s.add_term(q(static_cast<int>(k)), c[k]);
  return s;
}

/// Coefficients of q^0..q^H.
inline std::vector<long> coeffs(const CharSeries& s) {
  std::vector<long> out;
  for (int k = 0; k <= s.height_bound(); ++k) out.push_back(s.coefficient(q(k)).get_si());
  return out;
}

}  // namespace bbsuper::testing
