#include "famval/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "famval/axioms.hpp"
#include "famval/errors.hpp"
#include "famval/hedging.hpp"
#include "famval/report.hpp"
#include "famval/scenario.hpp"
#include "famval/valuation.hpp"

namespace famval {

namespace {

struct Emitter {
    std::ostream& out;
    bool json = false;

    void record(const RecordWriter& rw) {
        out << rw.str() << '\n';
    }
    void line(const std::string& s) {
        out << s << '\n';
    }
};

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string num_col(double v) {
    std::string s = fmt_num(v);
    const std::size_t width = 17;
    return s.size() >= width ? " " + s : std::string(width - s.size(), ' ') + s;
}

void cmd_price(const Scenario& sc, Emitter& em) {
    if (!em.json) {
        em.line(pad("instrument", 22) +
                "              bid              mid              ask          min_exp          max_exp");
    }
    for (const Payoff& instrument : sc.instruments) {
        const PriceQuote q = quote(instrument, sc.regularity, sc.market);
        if (em.json) {
            RecordWriter rw;
            rw.add("command", "price")
                .add("instrument", instrument.describe())
                .add("bid", q.bid)
                .add("mid", q.mid)
                .add("ask", q.ask)
                .add("min_exp", q.min_exp)
                .add("max_exp", q.max_exp)
                .add("r", q.r)
                .add("T", q.T);
            em.record(rw);
        } else {
            em.line(pad(instrument.describe(), 22) + num_col(q.bid) + num_col(q.mid) +
                    num_col(q.ask) + num_col(q.min_exp) + num_col(q.max_exp));
        }
    }
}

void cmd_forward(const Scenario& sc, Emitter& em) {
    const double implied = implied_forward(sc.regularity);
    const bool has_spot = sc.market.spot.has_value();
    if (em.json) {
        RecordWriter rw;
        rw.add("command", "forward").add("implied_forward", implied);
        if (has_spot) {
            rw.add("forward_price", forward_price(sc.market))
                .add("spot_residual", spot_condition_residual(sc.regularity, sc.market));
        }
        em.record(rw);
    } else {
        em.line("implied_forward  " + fmt_num(implied));
        if (has_spot) {
            em.line("forward_price    " + fmt_num(forward_price(sc.market)));
            em.line("spot_residual    " + fmt_num(spot_condition_residual(sc.regularity, sc.market)));
        }
    }
    if (!has_spot) {
        return;
    }
    for (const Payoff& instrument : sc.instruments) {
        if (instrument.kind() != PayoffKind::Forward) {
            continue;
        }
        const double strike = *instrument.strike();
        const double value = forward_value(sc.market, strike);
        if (em.json) {
            RecordWriter rw;
            rw.add("command", "forward_value")
                .add("instrument", instrument.describe())
                .add("strike", strike)
                .add("forward_value", value);
            em.record(rw);
        } else {
            em.line(pad("forward_value " + instrument.describe(), 34) + fmt_num(value));
        }
    }
}

void cmd_parity(const Scenario& sc, Emitter& em) {
    if (!em.json) {
        em.line(pad("instrument", 22) + "           strike         residual");
    }
    for (const Payoff& instrument : sc.instruments) {
        const auto strike = instrument.strike();
        if (!strike) {
            continue;
        }
        const double residual = parity_residual(sc.regularity, *strike, sc.market);
        if (em.json) {
            RecordWriter rw;
            rw.add("command", "parity")
                .add("instrument", instrument.describe())
                .add("strike", *strike)
                .add("residual", residual);
            em.record(rw);
        } else {
            em.line(pad(instrument.describe(), 22) + num_col(*strike) + num_col(residual));
        }
    }
}

void cmd_delta(const Scenario& sc, Emitter& em) {
    if (!em.json) {
        em.line(pad("instrument", 22) +
                "            delta           u_star           theta0        uncovered           hedged");
    }
    for (const Payoff& instrument : sc.instruments) {
        const HedgeReport report = hedged_portfolio_report(instrument, sc.regularity, sc.market);
        if (em.json) {
            RecordWriter rw;
            rw.add("command", "delta")
                .add("instrument", instrument.describe())
                .add("delta", report.delta)
                .add("u_star", report.option_mid)
                .add("theta0", report.spot)
                .add("uncovered", report.uncovered_min_profit)
                .add("hedged", report.hedged_min_profit);
            em.record(rw);
        } else {
            em.line(pad(instrument.describe(), 22) + num_col(report.delta) +
                    num_col(report.option_mid) + num_col(report.spot) +
                    num_col(report.uncovered_min_profit) + num_col(report.hedged_min_profit));
        }
    }
}

void cmd_profit(const Scenario& sc, Emitter& em) {
    if (!em.json) {
        em.line(pad("instrument", 22) + "  uncovered_min_profit  uncovered_min_profit_pv");
    }
    const double disc = sc.market.discount();
    for (const Payoff& instrument : sc.instruments) {
        const double value = uncovered_min_profit(instrument, sc.regularity, sc.market);
        if (em.json) {
            RecordWriter rw;
            rw.add("command", "profit")
                .add("instrument", instrument.describe())
                .add("uncovered_min_profit", value)
                .add("uncovered_min_profit_pv", disc * value);
            em.record(rw);
        } else {
            em.line(pad(instrument.describe(), 22) + num_col(value) + num_col(disc * value));
        }
    }
}

void cmd_calibrate(const Scenario& sc, const CommandOptions& options, Emitter& em) {
    if (options.out_path.empty()) {
        throw std::invalid_argument("calibrate requires --out <path>");
    }
    const double residual_before = spot_condition_residual(sc.regularity, sc.market);
    const Regularity calibrated = calibrate_scale(sc.regularity, sc.market);
    const double residual_after = spot_condition_residual(calibrated, sc.market);
    const double scale = sc.market.spot_or_throw() * sc.market.growth() /
                         implied_forward(sc.regularity);

    Scenario out_scenario{sc.market, calibrated, sc.instruments, sc.uses_complete_uncertainty};
    std::ofstream out(options.out_path);
    if (!out) {
        throw std::invalid_argument("calibrate: cannot write output file '" + options.out_path +
                                    "'");
    }
    out << scenario_to_json(out_scenario);

    if (em.json) {
        RecordWriter rw;
        rw.add("command", "calibrate")
            .add("scale", scale)
            .add("residual_before", residual_before)
            .add("residual_after", residual_after);
        em.record(rw);
    } else {
        em.line("scale            " + fmt_num(scale));
        em.line("residual_before  " + fmt_num(residual_before));
        em.line("residual_after   " + fmt_num(residual_after));
        em.line("written          " + options.out_path);
    }
}

void cmd_axioms(const Scenario& sc, const CommandOptions& options, Emitter& em) {
    if (options.cases <= 0) {
        throw std::invalid_argument("axioms: --cases must be positive");
    }
    const AxiomSummary summary = run_axiom_checks(options.seed, options.cases, sc.market);
    if (em.json) {
        RecordWriter rw;
        rw.add("command", "axioms")
            .add("cases", static_cast<std::int64_t>(summary.cases))
            .add("failures", static_cast<std::int64_t>(summary.failures));
        if (summary.first_failing_seed) {
            rw.add("first_failing_seed",
                   static_cast<std::int64_t>(*summary.first_failing_seed));
        } else {
            rw.add_null("first_failing_seed");
        }
        em.record(rw);
    } else {
        em.line("cases              " + std::to_string(summary.cases));
        em.line("failures           " + std::to_string(summary.failures));
        em.line("first_failing_seed " +
                (summary.first_failing_seed ? std::to_string(*summary.first_failing_seed)
                                            : std::string("none")));
    }
}

}  // namespace

int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (options.format != "text" && options.format != "json") {
            throw std::invalid_argument("unknown format '" + options.format +
                                        "' (expected text or json)");
        }
        Emitter em{out, options.format == "json"};
        const Scenario sc = load_scenario(options.scenario_path);

        if (options.command == "price") {
            cmd_price(sc, em);
        } else if (options.command == "forward") {
            cmd_forward(sc, em);
        } else if (options.command == "parity") {
            cmd_parity(sc, em);
        } else if (options.command == "delta") {
            cmd_delta(sc, em);
        } else if (options.command == "profit") {
            cmd_profit(sc, em);
        } else if (options.command == "calibrate") {
            cmd_calibrate(sc, options, em);
        } else if (options.command == "axioms") {
            cmd_axioms(sc, options, em);
        } else {
            throw std::invalid_argument("unknown command '" + options.command + "'");
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace famval
