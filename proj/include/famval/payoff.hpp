#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "famval/grid.hpp"

namespace famval {

enum class PayoffKind { Call, Put, Forward, Constant, Identity, Custom };

/**
 * @brief Terminal payoff f(theta) of a European-style contract.
 *
 * Built through the named factories. Custom payoffs are piecewise linear
 * between their knots and extrapolate flat outside the knot range, which
 * keeps them bounded on any grid.
 */
class Payoff {
public:
    static Payoff call(double strike);
    static Payoff put(double strike);
    static Payoff forward(double strike);
    static Payoff constant(double value);
    static Payoff identity();

    /// Knots are (theta, value) pairs with strictly increasing theta.
    /// Throws std::invalid_argument on non-finite or unordered knots.
    static Payoff piecewise_linear(std::vector<std::pair<double, double>> knots);

    PayoffKind kind() const noexcept { return kind_; }

    /// Strike for call/put/forward, empty otherwise.
    std::optional<double> strike() const noexcept;

    /// Constant payoffs only.
    double constant_value() const noexcept { return param_; }

    /// Custom payoffs only; empty for the named kinds.
    const std::vector<std::pair<double, double>>& knots() const noexcept { return knots_; }

    double operator()(double theta) const;

    /// Stable human-readable label, e.g. "call(100)".
    std::string describe() const;

private:
    Payoff(PayoffKind kind, double param) : kind_(kind), param_(param) {}

    PayoffKind kind_;
    double param_ = 0.0;  // strike or constant value
    std::vector<std::pair<double, double>> knots_;
};

/// Tabulates f on the grid; element i equals payoff(grid[i]).
std::vector<double> evaluate_payoff(const Payoff& payoff, const StateGrid& grid);

}  // namespace famval
