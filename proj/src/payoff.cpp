#include "famval/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace famval {

namespace {

double require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string("Payoff: ") + what + " must be finite");
    }
    return x;
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v == 0.0 ? 0.0 : v);
    return buf;
}

}  // namespace

Payoff Payoff::call(double strike) {
    return Payoff(PayoffKind::Call, require_finite(strike, "strike"));
}

Payoff Payoff::put(double strike) {
    return Payoff(PayoffKind::Put, require_finite(strike, "strike"));
}

Payoff Payoff::forward(double strike) {
    return Payoff(PayoffKind::Forward, require_finite(strike, "strike"));
}

Payoff Payoff::constant(double value) {
    return Payoff(PayoffKind::Constant, require_finite(value, "constant value"));
}

Payoff Payoff::identity() {
    return Payoff(PayoffKind::Identity, 0.0);
}

Payoff Payoff::piecewise_linear(std::vector<std::pair<double, double>> knots) {
    if (knots.empty()) {
        throw std::invalid_argument("Payoff: custom payoff needs at least one knot");
    }
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!std::isfinite(knots[i].first) || !std::isfinite(knots[i].second)) {
            throw std::invalid_argument("Payoff: custom payoff knot " + std::to_string(i) +
                                        " is not finite");
        }
        if (i > 0 && knots[i].first <= knots[i - 1].first) {
            throw std::invalid_argument("Payoff: custom payoff knots must be strictly "
                                        "increasing in theta");
        }
    }
    Payoff p(PayoffKind::Custom, 0.0);
    p.knots_ = std::move(knots);
    return p;
}

std::optional<double> Payoff::strike() const noexcept {
    switch (kind_) {
        case PayoffKind::Call:
        case PayoffKind::Put:
        case PayoffKind::Forward:
            return param_;
        default:
            return std::nullopt;
    }
}

double Payoff::operator()(double theta) const {
    switch (kind_) {
        case PayoffKind::Call:
            return std::max(theta - param_, 0.0);
        case PayoffKind::Put:
            return std::max(param_ - theta, 0.0);
        case PayoffKind::Forward:
            return theta - param_;
        case PayoffKind::Constant:
            return param_;
        case PayoffKind::Identity:
            return theta;
        case PayoffKind::Custom:
            break;
    }
    // Piecewise linear, flat outside the knot range; exact at knots.
    if (theta <= knots_.front().first) {
        return knots_.front().second;
    }
    if (theta >= knots_.back().first) {
        return knots_.back().second;
    }
    auto hi = std::upper_bound(knots_.begin(), knots_.end(), theta,
                               [](double t, const auto& k) { return t < k.first; });
    auto lo = hi - 1;
    if (theta == lo->first) {
        return lo->second;
    }
    const double w = (theta - lo->first) / (hi->first - lo->first);
    return lo->second + w * (hi->second - lo->second);
}

std::string Payoff::describe() const {
    switch (kind_) {
        case PayoffKind::Call:
            return "call(" + short_num(param_) + ")";
        case PayoffKind::Put:
            return "put(" + short_num(param_) + ")";
        case PayoffKind::Forward:
            return "forward(" + short_num(param_) + ")";
        case PayoffKind::Constant:
            return "constant(" + short_num(param_) + ")";
        case PayoffKind::Identity:
            return "identity";
        case PayoffKind::Custom:
            return "custom(" + std::to_string(knots_.size()) + " knots)";
    }
    return "payoff";
}

std::vector<double> evaluate_payoff(const Payoff& payoff, const StateGrid& grid) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = payoff(grid[i]);
    }
    return values;
}

}  // namespace famval
