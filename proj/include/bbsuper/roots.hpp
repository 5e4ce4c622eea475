#pragma once

#include "bbsuper/datum.hpp"
#include "bbsuper/root_table.hpp"
#include "bbsuper/series.hpp"

namespace bbsuper {

/// Real iff (beta, beta) > 0.
RootClass classify(const OddCartanDatum& datum, const RootVector& beta);

/// Multiplicities through height H from the lambda = 0 character identity
/// R = sum_w eps(w) e^{w(rho) - rho} w(S_0). Solved height by height; each
/// root space takes the parity given by parity_of. Throws
/// NegativeMultiplicity rather than clamping.
RootTable solve_multiplicities(const OddCartanDatum& datum, int H, unsigned jobs = 1);

/// denominator_R(table) - RHS(lambda = 0), truncated at H.
CharSeries denominator_residual(const OddCartanDatum& datum, const RootTable& table, int H);

}  // namespace bbsuper
