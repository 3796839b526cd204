#pragma once

#include <cstddef>
#include <vector>

namespace famval {

/**
 * @brief Discretized set of terminal underlying values.
 *
 * States are strictly increasing, finite and nonnegative; the grid is never
 * empty. Every expectation in the engine is a finite weighted sum over these
 * states, so all payoffs evaluated on a grid are automatically bounded.
 */
class StateGrid {
public:
    explicit StateGrid(std::vector<double> states);

    std::size_t size() const noexcept { return states_.size(); }
    double operator[](std::size_t i) const noexcept { return states_[i]; }
    const std::vector<double>& states() const noexcept { return states_; }

    double front() const noexcept { return states_.front(); }
    double back() const noexcept { return states_.back(); }

    bool operator==(const StateGrid&) const = default;

private:
    std::vector<double> states_;
};

/// Equally spaced grid over [lo, hi] with `points` states (points >= 2, lo < hi).
StateGrid linspace_grid(double lo, double hi, std::size_t points);

}  // namespace famval
