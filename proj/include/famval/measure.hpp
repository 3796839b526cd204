#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "famval/grid.hpp"

namespace famval {

/**
 * @brief One probability measure on a grid, stored as normalized weights.
 *
 * Weights are nonnegative and renormalized on construction so they sum to 1
 * as closely as representable (within 1e-12 in any case). The measure does
 * not own its grid; a Regularity ties measures and grid together and checks
 * the lengths match.
 */
class DiscreteMeasure {
public:
    /// Throws std::invalid_argument on negative, non-finite or all-zero weights.
    explicit DiscreteMeasure(std::vector<double> weights, std::string label = {});

    const std::vector<double>& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    const std::string& label() const noexcept { return label_; }

private:
    std::vector<double> weights_;
    std::string label_;
};

/// Point mass at grid state `state_index`.
DiscreteMeasure dirac(const StateGrid& grid, std::size_t state_index);

/// Equal weight on the listed states; the index set must be nonempty and in range.
DiscreteMeasure uniform_on(const StateGrid& grid, const std::vector<std::size_t>& state_indices);

/// Arbitrary nonnegative weights, renormalized to sum 1.
DiscreteMeasure explicit_weights(const StateGrid& grid, std::vector<double> weights,
                                 std::string label = {});

struct LognormalGridSpec {
    std::size_t n_points = 2001;          // >= 3, odd
    double log_halfwidth_sigmas = 6.0;    // grid half width in units of sigma*sqrt(t)
};

/**
 * @brief Discretized lognormal terminal distribution with its own grid.
 *
 * States are theta_i = exp(m + x_i * v) with v = sigma*sqrt(t),
 * m = ln(s0) + (r - sigma^2/2)*t and x_i equally spaced on
 * [-h, +h]; weights are proportional to the standard normal density at x_i.
 * The discrete mean is locked to the forward s0*e^{rt}: construction fails
 * if the requested grid is too coarse to reproduce it within 1e-4 relative.
 */
std::pair<StateGrid, DiscreteMeasure> lognormal(const LognormalGridSpec& spec, double s0,
                                                double r, double sigma, double t);

}  // namespace famval
