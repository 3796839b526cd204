#include "famval/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace famval {

StateGrid::StateGrid(std::vector<double> states) : states_(std::move(states)) {
    if (states_.empty()) {
        throw std::invalid_argument("StateGrid: at least one state required");
    }
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (!std::isfinite(states_[i])) {
            throw std::invalid_argument("StateGrid: state " + std::to_string(i) +
                                        " is not finite");
        }
        if (states_[i] < 0.0) {
            throw std::invalid_argument("StateGrid: state " + std::to_string(i) +
                                        " is negative");
        }
        if (i > 0 && states_[i] <= states_[i - 1]) {
            throw std::invalid_argument("StateGrid: states must be strictly increasing");
        }
    }
}

StateGrid linspace_grid(double lo, double hi, std::size_t points) {
    if (points < 2) {
        throw std::invalid_argument("linspace_grid: at least 2 points required");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("linspace_grid: min must be below max");
    }
    std::vector<double> states(points);
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        states[i] = lo + static_cast<double>(i) * step;
    }
    states.back() = hi;  // avoid rounding past the endpoint
    return StateGrid(std::move(states));
}

}  // namespace famval
