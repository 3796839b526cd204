#include "famval/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "famval/numerics.hpp"

namespace famval {

DiscreteMeasure::DiscreteMeasure(std::vector<double> weights, std::string label)
    : weights_(std::move(weights)), label_(std::move(label)) {
    if (weights_.empty()) {
        throw std::invalid_argument("DiscreteMeasure: empty weight vector");
    }
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (!std::isfinite(weights_[i]) || weights_[i] < 0.0) {
            throw std::invalid_argument("DiscreteMeasure: weight " + std::to_string(i) +
                                        " must be finite and nonnegative");
        }
    }
    const double total = compensated_sum(weights_);
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw std::invalid_argument("DiscreteMeasure: weights must have positive finite sum");
    }
    if (total != 1.0) {
        for (double& w : weights_) {
            w /= total;
        }
    }
}

DiscreteMeasure dirac(const StateGrid& grid, std::size_t state_index) {
    if (state_index >= grid.size()) {
        throw std::invalid_argument("dirac: state index " + std::to_string(state_index) +
                                    " out of range for grid of size " +
                                    std::to_string(grid.size()));
    }
    std::vector<double> w(grid.size(), 0.0);
    w[state_index] = 1.0;
    return DiscreteMeasure(std::move(w));
}

DiscreteMeasure uniform_on(const StateGrid& grid, const std::vector<std::size_t>& state_indices) {
    if (state_indices.empty()) {
        throw std::invalid_argument("uniform_on: index set must be nonempty");
    }
    std::vector<double> w(grid.size(), 0.0);
    for (std::size_t idx : state_indices) {
        if (idx >= grid.size()) {
            throw std::invalid_argument("uniform_on: state index " + std::to_string(idx) +
                                        " out of range");
        }
        w[idx] = 1.0;
    }
    return DiscreteMeasure(std::move(w));
}

DiscreteMeasure explicit_weights(const StateGrid& grid, std::vector<double> weights,
                                 std::string label) {
    if (weights.size() != grid.size()) {
        throw std::invalid_argument("explicit_weights: weight vector length " +
                                    std::to_string(weights.size()) + " does not match grid size " +
                                    std::to_string(grid.size()));
    }
    return DiscreteMeasure(std::move(weights), std::move(label));
}

std::pair<StateGrid, DiscreteMeasure> lognormal(const LognormalGridSpec& spec, double s0,
                                                double r, double sigma, double t) {
    if (!(s0 > 0.0) || !std::isfinite(s0)) {
        throw std::invalid_argument("lognormal: s0 must be positive");
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("lognormal: sigma must be positive");
    }
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("lognormal: t must be positive");
    }
    if (!std::isfinite(r)) {
        throw std::invalid_argument("lognormal: r must be finite");
    }
    if (spec.n_points < 3 || spec.n_points % 2 == 0) {
        throw std::invalid_argument("lognormal: n_points must be odd and >= 3");
    }
    if (!(spec.log_halfwidth_sigmas > 0.0) || !std::isfinite(spec.log_halfwidth_sigmas)) {
        throw std::invalid_argument("lognormal: log halfwidth must be positive");
    }

    const double v = sigma * std::sqrt(t);
    const double m = std::log(s0) + (r - 0.5 * sigma * sigma) * t;
    const double h = spec.log_halfwidth_sigmas;
    const std::size_t n = spec.n_points;
    const double dx = 2.0 * h / static_cast<double>(n - 1);

    std::vector<double> states(n);
    std::vector<double> weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = -h + static_cast<double>(i) * dx;
        states[i] = std::exp(m + x * v);
        weights[i] = std::exp(-0.5 * x * x);
    }

    StateGrid grid(std::move(states));
    DiscreteMeasure measure(std::move(weights), "lognormal");

    // The discrete mean must reproduce the forward; a grid too narrow or too
    // coarse cannot, and is rejected rather than silently mispriced.
    const double mean = compensated_dot(measure.weights(), grid.states());
    const double target = s0 * std::exp(r * t);
    if (std::abs(mean - target) > 1e-4 * target) {
        throw std::invalid_argument("lognormal: grid spec cannot lock the mean to the "
                                    "forward within 1e-4 relative; increase n_points or "
                                    "log_halfwidth_sigmas");
    }
    return {std::move(grid), std::move(measure)};
}

}  // namespace famval
