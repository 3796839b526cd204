#pragma once

#include "famval/market.hpp"
#include "famval/payoff.hpp"
#include "famval/regularity.hpp"

namespace famval {

/// Static hedge summary for one option position.
struct HedgeReport {
    double delta = 0.0;                // underlying units per option
    double uncovered_min_profit = 0.0; // at T, always <= 0
    double hedged_min_profit = 0.0;    // at T, criterion of the hedged pair
    double option_mid = 0.0;           // u*, the mid the option leg is priced at
    double spot = 0.0;                 // theta0 used for the underlying leg
};

/// Minimal expected terminal profit of an uncovered long position priced at
/// mid: (min_exp - max_exp)/2 of the payoff over the family. Zero exactly
/// when every member gives the same expectation, negative otherwise. The
/// market financing cancels out of the value; the parameter is kept so the
/// call sites mirror the rest of the pricing surface.
double uncovered_min_profit(const Payoff& payoff, const Regularity& reg,
                            const MarketParams& market);

/// Static hedge ratio: minus the expectation spread of the payoff divided by
/// the expectation spread of the underlying. Throws DegenerateFamilyError
/// when every member shares the same expected underlying value.
double generalized_delta(const Payoff& payoff, const Regularity& reg);

/// Builds the two-leg hedged position (option at its mid, delta units of
/// underlying at the spot) and evaluates its criterion by full enumeration
/// over the family. Requires the spot to satisfy the fair-regularity
/// condition within 1e-9*theta0, else throws UncalibratedSpotError.
HedgeReport hedged_portfolio_report(const Payoff& payoff, const Regularity& reg,
                                    const MarketParams& market);

}  // namespace famval
