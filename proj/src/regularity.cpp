#include "famval/regularity.hpp"

#include <stdexcept>
#include <string>

namespace famval {

Regularity::Regularity(StateGrid grid, std::vector<DiscreteMeasure> measures)
    : grid_(std::move(grid)), measures_(std::move(measures)) {
    if (measures_.empty()) {
        throw std::invalid_argument("Regularity: family must be nonempty");
    }
    for (std::size_t i = 0; i < measures_.size(); ++i) {
        if (measures_[i].size() != grid_.size()) {
            throw std::invalid_argument("Regularity: measure " + std::to_string(i) +
                                        " has " + std::to_string(measures_[i].size()) +
                                        " weights but the grid has " +
                                        std::to_string(grid_.size()) + " states");
        }
    }
}

Regularity singleton(StateGrid grid, DiscreteMeasure measure) {
    std::vector<DiscreteMeasure> ms;
    ms.push_back(std::move(measure));
    return Regularity(std::move(grid), std::move(ms));
}

Regularity complete_uncertainty(const StateGrid& grid) {
    std::vector<DiscreteMeasure> ms;
    ms.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        ms.push_back(dirac(grid, i));
    }
    return Regularity(grid, std::move(ms));
}

Regularity family(StateGrid grid, std::vector<DiscreteMeasure> measures) {
    return Regularity(std::move(grid), std::move(measures));
}

}  // namespace famval
