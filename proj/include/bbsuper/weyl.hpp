#pragma once

#include <span>
#include <vector>

#include "bbsuper/datum.hpp"

namespace bbsuper {

/// A Weyl group element reached from the dominant chamber. `word` lists the
/// simple reflections in the order they are applied, so
/// image = r_{word.back()} ... r_{word.front()} (lambda + rho).
struct OrbitElement {
  std::vector<std::size_t> word;
  int sign = 1;
  Weight image;
  RootVector defect;  // (lambda + rho) - image
};

/// All w in W with ht((lambda+rho) - w(lambda+rho)) <= H, sorted by defect.
/// Throws NotDominant unless lambda is dominant integral.
std::vector<OrbitElement> orbit_frontier(const OddCartanDatum& datum, const Weight& lambda, int H);

/// Same traversal from an arbitrary start point that is strictly positive on
/// every real coroot.
std::vector<OrbitElement> orbit_from(const OddCartanDatum& datum, const Weight& start, int H);

/// w(beta) for w given as a word (applied left to right).
RootCombination act_on_root(const OddCartanDatum& datum, std::span<const std::size_t> word,
                            const RootCombination& beta);

}  // namespace bbsuper
