#pragma once

#include <cstddef>
#include <vector>

#include "famval/grid.hpp"
#include "famval/measure.hpp"

namespace famval {

/**
 * @brief A finite family of measures sharing one grid.
 *
 * The family stands in for the convex hull it generates: the minimum and
 * maximum of any expectation over the hull are attained at the listed
 * generators, so enumerating members is enough for every quantity the
 * engine computes. Member order never affects a computed value.
 */
class Regularity {
public:
    /// Throws std::invalid_argument on an empty family or on measures whose
    /// weight vectors do not match the grid length.
    Regularity(StateGrid grid, std::vector<DiscreteMeasure> measures);

    const StateGrid& grid() const noexcept { return grid_; }
    const std::vector<DiscreteMeasure>& measures() const noexcept { return measures_; }
    std::size_t size() const noexcept { return measures_.size(); }

private:
    StateGrid grid_;
    std::vector<DiscreteMeasure> measures_;
};

/// Family with a single member; min and max expectations coincide.
Regularity singleton(StateGrid grid, DiscreteMeasure measure);

/// All Dirac measures on the grid, one per state. Expectations over this
/// family collapse to pointwise payoff extremes.
Regularity complete_uncertainty(const StateGrid& grid);

/// Family from an explicit measure list, kept in the given order.
Regularity family(StateGrid grid, std::vector<DiscreteMeasure> measures);

}  // namespace famval
