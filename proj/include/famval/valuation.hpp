#pragma once

#include "famval/expectation.hpp"
#include "famval/market.hpp"
#include "famval/payoff.hpp"
#include "famval/regularity.hpp"

namespace famval {

/// Two-sided quote: bid and ask are the discounted extreme expectations of
/// the payoff over the family, mid their discounted average.
struct PriceQuote {
    double bid = 0.0;
    double mid = 0.0;
    double ask = 0.0;
    double r = 0.0;
    double T = 0.0;

    /// Undiscounted expectation extremes behind the quote.
    double min_exp = 0.0;
    double max_exp = 0.0;
};

PriceQuote quote(const Payoff& payoff, const Regularity& reg, const MarketParams& market);

/// Cash-and-carry forward price theta0 * e^{rT}. Requires a spot.
double forward_price(const MarketParams& market);

/// Mid of the expected underlying value over the family, the family's own
/// forward price.
double implied_forward(const Regularity& reg);

/// Discounted implied forward minus the observed spot; zero when the family
/// is consistent with the spot.
double spot_condition_residual(const Regularity& reg, const MarketParams& market);

/// Rescales the grid multiplicatively (weights unchanged) so the family
/// satisfies the spot condition. Throws CannotCalibrateError when the
/// implied forward is not positive.
Regularity calibrate_scale(const Regularity& reg, const MarketParams& market);

/// Value of a forward contract struck at `strike`: theta0 - strike*e^{-rT}.
double forward_value(const MarketParams& market, double strike);

/// Put-call parity defect: undiscounted mid of call minus mid of put, less
/// (theta0*e^{rT} - strike). Zero for spot-consistent families whose call
/// and put extremes pair up.
double parity_residual(const Regularity& reg, double strike, const MarketParams& market);

/// Closed-form Black-Scholes call value; used as an independent oracle for
/// the discretized-lognormal route.
double black_scholes_call(double s0, double strike, double r, double sigma, double t);

}  // namespace famval
