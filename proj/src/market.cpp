#include "famval/market.hpp"

#include <cmath>
#include <stdexcept>

namespace famval {

double MarketParams::growth() const {
    return std::exp(r * T);
}

double MarketParams::discount() const {
    return std::exp(-r * T);
}

void MarketParams::validate() const {
    if (!std::isfinite(r)) {
        throw std::invalid_argument("MarketParams: rate must be finite");
    }
    if (!std::isfinite(T) || T < 0.0) {
        throw std::invalid_argument("MarketParams: maturity must be finite and nonnegative");
    }
    if (spot && (!std::isfinite(*spot) || *spot < 0.0)) {
        throw std::invalid_argument("MarketParams: spot must be finite and nonnegative");
    }
}

double MarketParams::spot_or_throw() const {
    if (!spot) {
        throw std::invalid_argument("MarketParams: operation requires a spot price");
    }
    return *spot;
}

}  // namespace famval
