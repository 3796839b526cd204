#pragma once

#include <string>
#include <vector>

#include "famval/market.hpp"
#include "famval/payoff.hpp"
#include "famval/regularity.hpp"

namespace famval {

/**
 * @brief One scenario file: market, grid, measure family and instruments.
 *
 * JSON layout (all numbers decimal literals, UTF-8):
 *
 *   {
 *     "market": {"r": 0.0, "T": 1.0, "spot": 110.0},
 *     "grid": {"states": [90, 130]},            // or {"min":..,"max":..,"points":..}
 *     "regularity": [ {"type":"dirac","index":0},
 *                     {"type":"uniform","indices":[0,1]},
 *                     {"type":"explicit","weights":[2,2]} ],
 *     "instruments": [ {"type":"call","strike":100} ]
 *   }
 *
 * "regularity" may instead be the string "complete-uncertainty". A
 * {"type":"lognormal","sigma":..,"points":..,"halfwidth":..} measure builds
 * its own grid (s0 from market.spot, horizon from market.T); it must be the
 * only family member and the scenario must omit the "grid" block.
 */
struct Scenario {
    MarketParams market;
    Regularity regularity;
    std::vector<Payoff> instruments;
    bool uses_complete_uncertainty = false;  // preserved on round-trip
};

/// Parses scenario JSON text. Throws std::invalid_argument with a field
/// diagnostic on malformed input.
Scenario parse_scenario(const std::string& json_text);

/// Reads and parses a scenario file.
Scenario load_scenario(const std::string& path);

/// Deterministic JSON serialization (states and weights at full precision;
/// measures written in explicit-weight form unless the family is the
/// complete-uncertainty keyword). Output round-trips through parse_scenario.
std::string scenario_to_json(const Scenario& scenario);

}  // namespace famval
