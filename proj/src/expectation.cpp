#include "famval/expectation.hpp"

#include <cmath>
#include <stdexcept>

#include "famval/numerics.hpp"

namespace famval {

double expectation(const DiscreteMeasure& measure, std::span<const double> values) {
    if (measure.size() != values.size()) {
        throw std::invalid_argument("expectation: value vector length does not match measure");
    }
    return compensated_dot(measure.weights(), values);
}

ExpectationBounds bounds(const Regularity& reg, std::span<const double> values) {
    if (values.size() != reg.grid().size()) {
        throw std::invalid_argument("bounds: value vector length does not match grid");
    }
    ExpectationBounds b;
    const auto& members = reg.measures();
    b.min_exp = b.max_exp = expectation(members[0], values);
    for (std::size_t i = 1; i < members.size(); ++i) {
        const double e = expectation(members[i], values);
        if (e < b.min_exp) {
            b.min_exp = e;
            b.argmin_index = i;
        }
        if (e > b.max_exp) {
            b.max_exp = e;
            b.argmax_index = i;
        }
    }
    return b;
}

double criterion(const Portfolio& portfolio, const Regularity& reg, const MarketParams& market) {
    const std::vector<double> profit = portfolio_profit(portfolio, reg.grid(), market);
    return bounds(reg, profit).min_exp;
}

IndifferenceResult indifferent(const Portfolio& a, const Portfolio& b, const Regularity& reg,
                               const MarketParams& market) {
    IndifferenceResult res;
    res.criterion_a = criterion(a, reg, market);
    res.criterion_b = criterion(b, reg, market);
    const double scale = 1.0 + std::max(std::abs(res.criterion_a), std::abs(res.criterion_b));
    res.indifferent = std::abs(res.criterion_a - res.criterion_b) <= 1e-9 * scale;
    return res;
}

}  // namespace famval
