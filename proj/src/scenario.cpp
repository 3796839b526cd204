#include "famval/scenario.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "famval/report.hpp"
#include "json.hpp"

namespace famval {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("scenario: " + msg);
}

const json& require_field(const json& obj, const char* key, const char* ctx) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(std::string(ctx) + ": missing field '" + key + "'");
    }
    return *it;
}

double as_number(const json& j, const char* what) {
    if (!j.is_number()) {
        fail(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

std::size_t as_index(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        fail(std::string(what) + " must be a nonnegative integer");
    }
    return static_cast<std::size_t>(j.get<long long>());
}

MarketParams parse_market(const json& j) {
    if (!j.is_object()) {
        fail("'market' must be an object");
    }
    MarketParams m;
    m.r = as_number(require_field(j, "r", "market"), "market.r");
    m.T = as_number(require_field(j, "T", "market"), "market.T");
    if (j.contains("spot")) {
        m.spot = as_number(j.at("spot"), "market.spot");
    }
    m.validate();
    return m;
}

StateGrid parse_grid(const json& j) {
    if (j.is_array()) {
        return StateGrid(j.get<std::vector<double>>());
    }
    if (!j.is_object()) {
        fail("'grid' must be an object or an array of states");
    }
    if (j.contains("states")) {
        const json& s = j.at("states");
        if (!s.is_array()) {
            fail("grid.states must be an array");
        }
        return StateGrid(s.get<std::vector<double>>());
    }
    const double lo = as_number(require_field(j, "min", "grid"), "grid.min");
    const double hi = as_number(require_field(j, "max", "grid"), "grid.max");
    const std::size_t points = as_index(require_field(j, "points", "grid"), "grid.points");
    return StateGrid(linspace_grid(lo, hi, points));
}

DiscreteMeasure parse_measure(const json& j, const StateGrid& grid, std::size_t pos) {
    const std::string ctx = "regularity[" + std::to_string(pos) + "]";
    if (!j.is_object()) {
        fail(ctx + " must be an object");
    }
    const json& type = require_field(j, "type", ctx.c_str());
    const std::string kind = type.is_string() ? type.get<std::string>() : std::string();
    if (kind == "dirac") {
        return dirac(grid, as_index(require_field(j, "index", ctx.c_str()), "dirac index"));
    }
    if (kind == "uniform") {
        const json& idx = require_field(j, "indices", ctx.c_str());
        if (!idx.is_array() || idx.empty()) {
            fail(ctx + ": 'indices' must be a nonempty array");
        }
        std::vector<std::size_t> indices;
        indices.reserve(idx.size());
        for (const auto& e : idx) {
            indices.push_back(as_index(e, "uniform index"));
        }
        return uniform_on(grid, indices);
    }
    if (kind == "explicit") {
        const json& w = require_field(j, "weights", ctx.c_str());
        if (!w.is_array()) {
            fail(ctx + ": 'weights' must be an array");
        }
        std::string label;
        if (j.contains("label") && j.at("label").is_string()) {
            label = j.at("label").get<std::string>();
        }
        return explicit_weights(grid, w.get<std::vector<double>>(), std::move(label));
    }
    fail(ctx + ": unknown measure type '" + kind + "'");
}

bool is_lognormal_spec(const json& j) {
    return j.is_object() && j.contains("type") && j.at("type").is_string() &&
           j.at("type").get<std::string>() == "lognormal";
}

Payoff parse_instrument(const json& j, std::size_t pos) {
    const std::string ctx = "instruments[" + std::to_string(pos) + "]";
    if (!j.is_object()) {
        fail(ctx + " must be an object");
    }
    const json& type = require_field(j, "type", ctx.c_str());
    const std::string kind = type.is_string() ? type.get<std::string>() : std::string();
    if (kind == "call" || kind == "put" || kind == "forward") {
        const double strike =
            as_number(require_field(j, "strike", ctx.c_str()), "instrument strike");
        if (kind == "call") return Payoff::call(strike);
        if (kind == "put") return Payoff::put(strike);
        return Payoff::forward(strike);
    }
    if (kind == "constant") {
        return Payoff::constant(
            as_number(require_field(j, "value", ctx.c_str()), "constant value"));
    }
    if (kind == "identity") {
        return Payoff::identity();
    }
    if (kind == "custom") {
        const json& knots = require_field(j, "knots", ctx.c_str());
        if (!knots.is_array() || knots.empty()) {
            fail(ctx + ": 'knots' must be a nonempty array of [theta, value] pairs");
        }
        std::vector<std::pair<double, double>> pairs;
        pairs.reserve(knots.size());
        for (const auto& k : knots) {
            if (!k.is_array() || k.size() != 2) {
                fail(ctx + ": each knot must be a [theta, value] pair");
            }
            pairs.emplace_back(as_number(k.at(0), "knot theta"), as_number(k.at(1), "knot value"));
        }
        return Payoff::piecewise_linear(std::move(pairs));
    }
    fail(ctx + ": unknown instrument type '" + kind + "'");
}

Scenario parse_document(const json& doc) {
    if (!doc.is_object()) {
        fail("top level must be an object");
    }
    const MarketParams market = parse_market(require_field(doc, "market", "scenario"));
    const json& reg = require_field(doc, "regularity", "scenario");

    // A lognormal family builds its own grid from the market block.
    if (reg.is_array() && reg.size() == 1 && is_lognormal_spec(reg.at(0))) {
        if (doc.contains("grid")) {
            fail("a lognormal regularity builds its own grid; remove the 'grid' block");
        }
        const json& spec = reg.at(0);
        LognormalGridSpec gs;
        if (spec.contains("points")) {
            gs.n_points = as_index(spec.at("points"), "lognormal points");
        }
        if (spec.contains("halfwidth")) {
            gs.log_halfwidth_sigmas = as_number(spec.at("halfwidth"), "lognormal halfwidth");
        }
        const double sigma = as_number(require_field(spec, "sigma", "lognormal"), "lognormal sigma");
        if (!market.spot) {
            fail("a lognormal regularity requires market.spot");
        }
        if (!(market.T > 0.0)) {
            fail("a lognormal regularity requires market.T > 0");
        }
        auto [grid, measure] = lognormal(gs, *market.spot, market.r, sigma, market.T);
        Scenario sc{market, singleton(std::move(grid), std::move(measure)), {}, false};
        if (doc.contains("instruments")) {
            const json& instruments = doc.at("instruments");
            if (!instruments.is_array()) {
                fail("'instruments' must be an array");
            }
            for (std::size_t i = 0; i < instruments.size(); ++i) {
                sc.instruments.push_back(parse_instrument(instruments.at(i), i));
            }
        }
        return sc;
    }

    StateGrid grid = parse_grid(require_field(doc, "grid", "scenario"));

    std::vector<DiscreteMeasure> measures;
    bool uses_cu = false;
    if (reg.is_string()) {
        if (reg.get<std::string>() != "complete-uncertainty") {
            fail("regularity keyword must be \"complete-uncertainty\"");
        }
        uses_cu = true;
    } else if (reg.is_array()) {
        if (reg.empty()) {
            fail("regularity must list at least one measure");
        }
        for (std::size_t i = 0; i < reg.size(); ++i) {
            if (is_lognormal_spec(reg.at(i))) {
                fail("a lognormal measure must be the only family member");
            }
            measures.push_back(parse_measure(reg.at(i), grid, i));
        }
    } else {
        fail("'regularity' must be an array of measures or \"complete-uncertainty\"");
    }

    Regularity regularity =
        uses_cu ? complete_uncertainty(grid) : Regularity(std::move(grid), std::move(measures));
    Scenario sc{market, std::move(regularity), {}, uses_cu};

    if (doc.contains("instruments")) {
        const json& instruments = doc.at("instruments");
        if (!instruments.is_array()) {
            fail("'instruments' must be an array");
        }
        for (std::size_t i = 0; i < instruments.size(); ++i) {
            sc.instruments.push_back(parse_instrument(instruments.at(i), i));
        }
    }
    return sc;
}

void write_number_array(std::ostream& os, const std::vector<double>& xs) {
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        os << fmt_num_exact(xs[i]);
    }
    os << ']';
}

void write_instrument(std::ostream& os, const Payoff& p) {
    switch (p.kind()) {
        case PayoffKind::Call:
            os << R"({"type": "call", "strike": )" << fmt_num_exact(*p.strike()) << '}';
            return;
        case PayoffKind::Put:
            os << R"({"type": "put", "strike": )" << fmt_num_exact(*p.strike()) << '}';
            return;
        case PayoffKind::Forward:
            os << R"({"type": "forward", "strike": )" << fmt_num_exact(*p.strike()) << '}';
            return;
        case PayoffKind::Constant:
            os << R"({"type": "constant", "value": )" << fmt_num_exact(p.constant_value()) << '}';
            return;
        case PayoffKind::Identity:
            os << R"({"type": "identity"})";
            return;
        case PayoffKind::Custom:
            break;
    }
    os << R"({"type": "custom", "knots": [)";
    const auto& knots = p.knots();
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        os << '[' << fmt_num_exact(knots[i].first) << ", " << fmt_num_exact(knots[i].second)
           << ']';
    }
    os << "]}";
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario: malformed JSON: ") + e.what());
    }
    try {
        return parse_document(doc);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("scenario: ") + e.what());
    }
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("scenario: cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string scenario_to_json(const Scenario& scenario) {
    std::ostringstream os;
    os << "{\n  \"market\": {\"r\": " << fmt_num_exact(scenario.market.r)
       << ", \"T\": " << fmt_num_exact(scenario.market.T);
    if (scenario.market.spot) {
        os << ", \"spot\": " << fmt_num_exact(*scenario.market.spot);
    }
    os << "},\n  \"grid\": {\"states\": ";
    write_number_array(os, scenario.regularity.grid().states());
    os << "},\n  \"regularity\": ";
    if (scenario.uses_complete_uncertainty) {
        os << "\"complete-uncertainty\"";
    } else {
        os << "[\n";
        const auto& measures = scenario.regularity.measures();
        for (std::size_t i = 0; i < measures.size(); ++i) {
            os << R"(    {"type": "explicit", "weights": )";
            write_number_array(os, measures[i].weights());
            if (!measures[i].label().empty()) {
                os << R"(, "label": ")" << json_escape(measures[i].label()) << '"';
            }
            os << '}' << (i + 1 < measures.size() ? "," : "") << '\n';
        }
        os << "  ]";
    }
    os << ",\n  \"instruments\": [";
    for (std::size_t i = 0; i < scenario.instruments.size(); ++i) {
        os << (i > 0 ? ", " : "");
        write_instrument(os, scenario.instruments[i]);
    }
    os << "]\n}\n";
    return os.str();
}

}  // namespace famval
