#pragma once

#include <optional>

namespace famval {

/// Financing context shared by all positions: continuously compounded
/// riskless rate r (per year), horizon T (years), and the observed spot
/// price when one is available. Purchases are financed and sale proceeds
/// deposited at the same rate, so a price u paid at t=0 costs u*e^{rT} at T.
struct MarketParams {
    double r = 0.0;
    double T = 0.0;
    std::optional<double> spot{};

    double growth() const;    // e^{rT}
    double discount() const;  // e^{-rT}

    /// Throws std::invalid_argument unless r is finite, T >= 0 and
    /// spot (when present) is finite and nonnegative.
    void validate() const;

    /// Spot price, or std::invalid_argument when none was given.
    double spot_or_throw() const;
};

}  // namespace famval
