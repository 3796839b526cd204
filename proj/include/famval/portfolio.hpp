#pragma once

#include <vector>

#include "famval/grid.hpp"
#include "famval/market.hpp"
#include "famval/payoff.hpp"

namespace famval {

/// One priced position: quantity q in a contract paying f(theta) at T,
/// transacted at price u at t=0. q > 0 is a purchase, q < 0 a sale.
struct Leg {
    Payoff payoff;
    double quantity = 0.0;
    double price = 0.0;
};

struct Portfolio {
    std::vector<Leg> legs;

    Portfolio() = default;
    explicit Portfolio(std::vector<Leg> l) : legs(std::move(l)) {}
};

/// Terminal profit per grid state: sum over legs of q*(-u*e^{rT} + f(theta)).
/// An empty portfolio yields zeros. Throws std::invalid_argument on
/// non-finite leg quantities or prices.
std::vector<double> portfolio_profit(const Portfolio& portfolio,
                                     const StateGrid& grid,
                                     const MarketParams& market);

}  // namespace famval
