#include "famval/axioms.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "famval/expectation.hpp"

namespace famval {

namespace {

// Raw-bit draws keep cases bit-exact across standard libraries.
double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * unit_real(rng);
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t salt) {
    return std::mt19937_64(seed ^ (salt * 0x9e3779b97f4a7c15ULL));
}

std::vector<double> draw_values(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> v(n);
    for (double& x : v) {
        x = uniform(rng, -100.0, 100.0);
    }
    return v;
}

Payoff payoff_from_values(const StateGrid& grid, const std::vector<double>& values) {
    std::vector<std::pair<double, double>> knots(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        knots[i] = {grid[i], values[i]};
    }
    return Payoff::piecewise_linear(std::move(knots));
}

std::string describe_violation(const char* what, std::uint64_t seed, double lhs, double rhs) {
    std::ostringstream os;
    os << what << " violated for seed " << seed << ": " << lhs << " vs " << rhs;
    return os.str();
}

constexpr double kRelTol = 1e-9;

double tol(double a, double b) {
    return kRelTol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace

RandomCase make_random_case(std::uint64_t seed) {
    std::mt19937_64 rng = seeded(seed, 0);

    const std::size_t n = 1 + uniform_index(rng, 64);
    std::vector<double> states(n);
    double level = uniform(rng, 0.5, 20.0);
    for (std::size_t i = 0; i < n; ++i) {
        states[i] = level;
        level += uniform(rng, 0.5, 8.0);
    }
    StateGrid grid(std::move(states));

    const std::size_t m = 1 + uniform_index(rng, 16);
    std::vector<DiscreteMeasure> measures;
    measures.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (unit_real(rng) < 0.25) {
            measures.push_back(dirac(grid, uniform_index(rng, n)));
            continue;
        }
        std::vector<double> w(n, 0.0);
        double total = 0.0;
        for (double& wi : w) {
            if (unit_real(rng) < 0.3) {
                continue;  // sparse entry
            }
            wi = unit_real(rng);
            total += wi;
        }
        if (total <= 0.0) {
            w[uniform_index(rng, n)] = 1.0;
        }
        measures.push_back(DiscreteMeasure(std::move(w)));
    }
    return RandomCase{seed, Regularity(std::move(grid), std::move(measures))};
}

std::vector<double> draw_payoff_values(std::uint64_t seed, std::uint64_t salt, std::size_t n) {
    std::mt19937_64 rng = seeded(seed, salt);
    return draw_values(rng, n);
}

CheckResult check_monotone_affine(const RandomCase& c) {
    std::mt19937_64 rng = seeded(c.seed, 1);
    const std::size_t n = c.regularity.grid().size();
    const std::vector<double> v = draw_values(rng, n);
    const ExpectationBounds bv = bounds(c.regularity, v);

    // Dominated payoff: v + nonnegative noise.
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = v[i] + uniform(rng, 0.0, 10.0);
    }
    const ExpectationBounds bw = bounds(c.regularity, w);
    if (bw.min_exp < bv.min_exp - tol(bw.min_exp, bv.min_exp) ||
        bw.max_exp < bv.max_exp - tol(bw.max_exp, bv.max_exp)) {
        return {false, describe_violation("monotonicity", c.seed, bv.min_exp, bw.min_exp)};
    }

    // Affine map with nonnegative slope.
    const double a = uniform(rng, 0.0, 2.0);
    const double b = uniform(rng, -50.0, 50.0);
    std::vector<double> affine(n);
    for (std::size_t i = 0; i < n; ++i) {
        affine[i] = a * v[i] + b;
    }
    const ExpectationBounds ba = bounds(c.regularity, affine);
    const double want_min = a * bv.min_exp + b;
    const double want_max = a * bv.max_exp + b;
    if (std::abs(ba.min_exp - want_min) > tol(ba.min_exp, want_min) ||
        std::abs(ba.max_exp - want_max) > tol(ba.max_exp, want_max)) {
        return {false, describe_violation("affine equivariance", c.seed, ba.min_exp, want_min)};
    }
    return {};
}

CheckResult check_concavity(const RandomCase& c) {
    std::mt19937_64 rng = seeded(c.seed, 2);
    const std::size_t n = c.regularity.grid().size();
    const std::vector<double> v1 = draw_values(rng, n);
    const std::vector<double> v2 = draw_values(rng, n);
    std::vector<double> mid(n);
    for (std::size_t i = 0; i < n; ++i) {
        mid[i] = 0.5 * (v1[i] + v2[i]);
    }
    const double m1 = bounds(c.regularity, v1).min_exp;
    const double m2 = bounds(c.regularity, v2).min_exp;
    const double m3 = bounds(c.regularity, mid).min_exp;
    if (2.0 * m3 < m1 + m2 - tol(2.0 * m3, m1 + m2)) {
        return {false, describe_violation("concavity", c.seed, 2.0 * m3, m1 + m2)};
    }
    return {};
}

CheckResult check_diversification(const RandomCase& c, const MarketParams& market) {
    std::mt19937_64 rng = seeded(c.seed, 3);
    const StateGrid& grid = c.regularity.grid();
    const std::vector<double> v1 = draw_values(rng, grid.size());
    const std::vector<double> v2 = draw_values(rng, grid.size());
    const double u1 = uniform(rng, -50.0, 50.0);
    const double u2 = uniform(rng, -50.0, 50.0);

    std::vector<double> vmid(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        vmid[i] = 0.5 * (v1[i] + v2[i]);
    }

    Portfolio d1;
    d1.legs.push_back({payoff_from_values(grid, v1), 1.0, u1});
    Portfolio d2;
    d2.legs.push_back({payoff_from_values(grid, v2), 1.0, u2});
    Portfolio d3;
    d3.legs.push_back({payoff_from_values(grid, vmid), 1.0, 0.5 * (u1 + u2)});

    const double c1 = criterion(d1, c.regularity, market);
    const double c2 = criterion(d2, c.regularity, market);
    const double c3 = criterion(d3, c.regularity, market);
    if (c1 + c2 > 2.0 * c3 + tol(c1 + c2, 2.0 * c3)) {
        return {false, describe_violation("diversification", c.seed, c1 + c2, 2.0 * c3)};
    }
    return {};
}

AxiomSummary run_axiom_checks(std::uint64_t base_seed, int cases, const MarketParams& market) {
    AxiomSummary summary;
    summary.cases = cases;
    for (int i = 0; i < cases; ++i) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
        const RandomCase c = make_random_case(seed);
        const bool ok = check_monotone_affine(c).passed && check_concavity(c).passed &&
                        check_diversification(c, market).passed;
        if (!ok) {
            ++summary.failures;
            if (!summary.first_failing_seed) {
                summary.first_failing_seed = seed;
            }
        }
    }
    return summary;
}

}  // namespace famval
