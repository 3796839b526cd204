#include "famval/hedging.hpp"

#include <cmath>
#include <vector>

#include "famval/errors.hpp"
#include "famval/expectation.hpp"
#include "famval/valuation.hpp"

namespace famval {

double uncovered_min_profit(const Payoff& payoff, const Regularity& reg,
                            const MarketParams& /*market*/) {
    const std::vector<double> values = evaluate_payoff(payoff, reg.grid());
    const ExpectationBounds b = bounds(reg, values);
    return 0.5 * (b.min_exp - b.max_exp);
}

double generalized_delta(const Payoff& payoff, const Regularity& reg) {
    const ExpectationBounds underlying = bounds(reg, reg.grid().states());
    const double spread = underlying.max_exp - underlying.min_exp;
    if (!(spread > 0.0)) {
        throw DegenerateFamilyError("generalized_delta: every family member has the same "
                                    "expected underlying value");
    }
    const std::vector<double> values = evaluate_payoff(payoff, reg.grid());
    const ExpectationBounds b = bounds(reg, values);
    return -(b.max_exp - b.min_exp) / spread;
}

HedgeReport hedged_portfolio_report(const Payoff& payoff, const Regularity& reg,
                                    const MarketParams& market) {
    market.validate();
    const double spot = market.spot_or_throw();
    const double residual = spot_condition_residual(reg, market);
    if (std::abs(residual) > 1e-9 * spot) {
        throw UncalibratedSpotError("hedged_portfolio_report: spot does not satisfy the "
                                    "fair-regularity condition (residual " +
                                    std::to_string(residual) + ")");
    }

    HedgeReport report;
    report.spot = spot;
    report.delta = generalized_delta(payoff, reg);
    report.option_mid = quote(payoff, reg, market).mid;
    report.uncovered_min_profit = uncovered_min_profit(payoff, reg, market);

    Portfolio hedged;
    hedged.legs.push_back({payoff, 1.0, report.option_mid});
    hedged.legs.push_back({Payoff::identity(), report.delta, spot});
    report.hedged_min_profit = criterion(hedged, reg, market);
    return report;
}

}  // namespace famval
