#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "famval/market.hpp"
#include "famval/regularity.hpp"

namespace famval {

/**
 * @brief Deterministic random test case for the criterion axioms.
 *
 * Reconstructible from its seed alone: grids have 1..64 nonnegative
 * strictly increasing states, families 1..16 measures (a mix of Diracs and
 * dense weight vectors), and payoff vectors drawn for the checks have
 * entries in [-100, 100]. The generator uses raw engine bits only, so a
 * seed produces the same case on every standard library.
 */
struct RandomCase {
    std::uint64_t seed = 0;
    Regularity regularity;
};

RandomCase make_random_case(std::uint64_t seed);

/// Payoff vector of length n with entries in [-100, 100], deterministic in
/// (seed, salt).
std::vector<double> draw_payoff_values(std::uint64_t seed, std::uint64_t salt, std::size_t n);

struct CheckResult {
    bool passed = true;
    std::string detail;  // empty when passed
};

/// Pointwise dominance orders the minimal expectation, and affine maps
/// a*L + b with a >= 0 pass through it.
CheckResult check_monotone_affine(const RandomCase& c);

/// Midpoint payoffs have criterion at least the average of the endpoints'.
CheckResult check_concavity(const RandomCase& c);

/// The half-and-half portfolio of two purchases never ranks below the
/// average of holding either alone.
CheckResult check_diversification(const RandomCase& c, const MarketParams& market);

struct AxiomSummary {
    int cases = 0;
    int failures = 0;
    std::optional<std::uint64_t> first_failing_seed{};
};

/// Runs all three checks on `cases` seeded cases starting at base_seed.
AxiomSummary run_axiom_checks(std::uint64_t base_seed, int cases, const MarketParams& market);

}  // namespace famval
