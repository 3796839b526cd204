#include "famval/portfolio.hpp"

#include <cmath>
#include <stdexcept>

namespace famval {

std::vector<double> portfolio_profit(const Portfolio& portfolio, const StateGrid& grid,
                                     const MarketParams& market) {
    market.validate();
    std::vector<double> profit(grid.size(), 0.0);
    const double growth = market.growth();
    for (const Leg& leg : portfolio.legs) {
        if (!std::isfinite(leg.quantity) || !std::isfinite(leg.price)) {
            throw std::invalid_argument("portfolio_profit: leg quantity and price "
                                        "must be finite");
        }
        const double financing = -leg.price * growth;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            profit[i] += leg.quantity * (financing + leg.payoff(grid[i]));
        }
    }
    return profit;
}

}  // namespace famval
