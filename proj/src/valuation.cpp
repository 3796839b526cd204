#include "famval/valuation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "famval/errors.hpp"
#include "famval/numerics.hpp"

namespace famval {

PriceQuote quote(const Payoff& payoff, const Regularity& reg, const MarketParams& market) {
    market.validate();
    const std::vector<double> values = evaluate_payoff(payoff, reg.grid());
    const ExpectationBounds b = bounds(reg, values);
    const double disc = market.discount();
    PriceQuote q;
    q.bid = disc * b.min_exp;
    q.ask = disc * b.max_exp;
    q.mid = disc * (0.5 * (b.min_exp + b.max_exp));
    q.min_exp = b.min_exp;
    q.max_exp = b.max_exp;
    q.r = market.r;
    q.T = market.T;
    return q;
}

double forward_price(const MarketParams& market) {
    market.validate();
    return market.spot_or_throw() * market.growth();
}

double implied_forward(const Regularity& reg) {
    const ExpectationBounds b = bounds(reg, reg.grid().states());
    return 0.5 * (b.min_exp + b.max_exp);
}

double spot_condition_residual(const Regularity& reg, const MarketParams& market) {
    market.validate();
    const double spot = market.spot_or_throw();
    return market.discount() * implied_forward(reg) - spot;
}

Regularity calibrate_scale(const Regularity& reg, const MarketParams& market) {
    market.validate();
    const double spot = market.spot_or_throw();
    if (!(spot > 0.0)) {
        throw std::invalid_argument("calibrate_scale: spot must be positive");
    }
    const double fwd = implied_forward(reg);
    if (!(fwd > 0.0)) {
        throw CannotCalibrateError("calibrate_scale: implied forward is not positive");
    }
    const double scale = spot * market.growth() / fwd;
    std::vector<double> scaled(reg.grid().size());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        scaled[i] = scale * reg.grid()[i];
    }
    return Regularity(StateGrid(std::move(scaled)), reg.measures());
}

double forward_value(const MarketParams& market, double strike) {
    market.validate();
    if (!std::isfinite(strike)) {
        throw std::invalid_argument("forward_value: strike must be finite");
    }
    return market.spot_or_throw() - strike * market.discount();
}

double parity_residual(const Regularity& reg, double strike, const MarketParams& market) {
    market.validate();
    const double spot = market.spot_or_throw();
    if (!std::isfinite(strike)) {
        throw std::invalid_argument("parity_residual: strike must be finite");
    }
    const std::vector<double> call_values = evaluate_payoff(Payoff::call(strike), reg.grid());
    const std::vector<double> put_values = evaluate_payoff(Payoff::put(strike), reg.grid());
    const ExpectationBounds bc = bounds(reg, call_values);
    const ExpectationBounds bp = bounds(reg, put_values);
    const double call_mid = 0.5 * (bc.min_exp + bc.max_exp);
    const double put_mid = 0.5 * (bp.min_exp + bp.max_exp);
    return (call_mid - put_mid) - (spot * market.growth() - strike);
}

double black_scholes_call(double s0, double strike, double r, double sigma, double t) {
    if (!(s0 > 0.0) || !(strike > 0.0) || !(sigma > 0.0) || !(t > 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("black_scholes_call: s0, strike, sigma and t must be "
                                    "positive and r finite");
    }
    const double vol = sigma * std::sqrt(t);
    const double d1 = (std::log(s0 / strike) + (r + 0.5 * sigma * sigma) * t) / vol;
    const double d2 = d1 - vol;
    return s0 * normal_cdf(d1) - strike * std::exp(-r * t) * normal_cdf(d2);
}

}  // namespace famval
