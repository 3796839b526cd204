#pragma once

#include <cstddef>
#include <span>

#include "famval/measure.hpp"
#include "famval/portfolio.hpp"
#include "famval/regularity.hpp"

namespace famval {

/// Weighted sum of `values` under the measure. Lengths must match.
double expectation(const DiscreteMeasure& measure, std::span<const double> values);

/// Extremes of the expectation of a value vector over a family.
/// Ties go to the lowest family index.
struct ExpectationBounds {
    double min_exp = 0.0;
    double max_exp = 0.0;
    std::size_t argmin_index = 0;
    std::size_t argmax_index = 0;
};

ExpectationBounds bounds(const Regularity& reg, std::span<const double> values);

/// The decision criterion: minimal expected terminal profit of the
/// portfolio over the family.
double criterion(const Portfolio& portfolio, const Regularity& reg, const MarketParams& market);

struct IndifferenceResult {
    bool indifferent = false;
    double criterion_a = 0.0;
    double criterion_b = 0.0;
};

/// Two decisions are indifferent when their criterion values agree within
/// 1e-9 relative (scale-aware).
IndifferenceResult indifferent(const Portfolio& a, const Portfolio& b, const Regularity& reg,
                               const MarketParams& market);

}  // namespace famval
