#include "bbsuper/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "bbsuper/error.hpp"

namespace bbsuper {

std::vector<OrbitElement> orbit_from(const OddCartanDatum& datum, const Weight& start, int H) {
  const std::size_t n = datum.rank();
  std::vector<std::int64_t> start_pairing(n, 0);
  for (auto i : datum.re_indices()) {
    const Rational p = pairing(datum, i, start);
    if (p.get_den() != 1 || p <= 0)
      throw Error(ErrorKind::NotDominant, "start point is not regular dominant on real index " +
                                              std::to_string(i + 1));
    start_pairing[i] = p.get_num().get_si();
  }

  std::vector<OrbitElement> out;
  std::set<RootVector> seen;
  std::deque<OrbitElement> queue;
  queue.push_back(OrbitElement{{}, 1, start, RootVector(n)});
  seen.insert(RootVector(n));

  while (!queue.empty()) {
    OrbitElement current = std::move(queue.front());
    queue.pop_front();
    for (auto i : datum.re_indices()) {
      // <h_i, image> = <h_i, start> - <h_i, defect>
      const std::int64_t p = start_pairing[i] - pairing(datum, i, current.defect.combination());
      if (p <= 0 || current.defect.height() + p > H) continue;
      RootVector defect = current.defect + RootVector::simple(n, i, static_cast<int>(p));
      if (!seen.insert(defect).second) continue;
      OrbitElement next{current.word, -current.sign, reflect(datum, i, current.image),
                        std::move(defect)};
      next.word.push_back(i);
      queue.push_back(std::move(next));
    }
    out.push_back(std::move(current));
  }

  std::sort(out.begin(), out.end(),
            [](const OrbitElement& a, const OrbitElement& b) { return a.defect < b.defect; });
  return out;
}

std::vector<OrbitElement> orbit_frontier(const OddCartanDatum& datum, const Weight& lambda, int H) {
  if (!is_dominant_integral(datum, lambda))
    throw Error(ErrorKind::NotDominant, "highest weight is not dominant integral");
  return orbit_from(datum, lambda + canonical_rho(datum), H);
}

RootCombination act_on_root(const OddCartanDatum& datum, std::span<const std::size_t> word,
                            const RootCombination& beta) {
  RootCombination out(beta);
  for (auto i : word) {
    if (!datum.is_real(i))
      throw Error(ErrorKind::ImaginaryIndexReflection,
                  "no simple reflection for imaginary index " + std::to_string(i + 1));
    out[i] -= pairing(datum, i, out);
  }
  return out;
}

}  // namespace bbsuper
