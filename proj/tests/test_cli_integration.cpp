// Drives the installed famval binary end to end: exit codes, report bytes,
// calibrate round trip. Usage: cli_integration <famval-binary> <fixtures-dir>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAILED: " << what << '\n';
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run(const std::string& binary, const std::string& args) {
    const std::string out_path = "/tmp/famval_cli_out.txt";
    const std::string err_path = "/tmp/famval_cli_err.txt";
    const std::string cmd = binary + " " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: cli_integration <famval-binary> <fixtures-dir>\n";
        return 2;
    }
    const std::string binary = argv[1];
    const std::string fixtures = argv[2];

    // Quotes, byte-deterministic machine output.
    {
        const std::string args = "price --scenario " + fixtures + "/two_dirac.json --format json";
        const RunResult a = run(binary, args);
        expect(a.exit_code == 0, "price exits 0");
        expect(a.out ==
                   "{\"command\":\"price\",\"instrument\":\"call(100)\",\"bid\":0,\"mid\":15,"
                   "\"ask\":30,\"min_exp\":0,\"max_exp\":30,\"r\":0,\"T\":1}\n"
                   "{\"command\":\"price\",\"instrument\":\"put(100)\",\"bid\":0,\"mid\":5,"
                   "\"ask\":10,\"min_exp\":0,\"max_exp\":10,\"r\":0,\"T\":1}\n",
               "price json bytes match");
        const RunResult b = run(binary, args);
        expect(a.out == b.out, "price output is byte-deterministic");

        // Each emitted record is self-delimiting and parses back as JSON.
        std::istringstream lines(a.out);
        std::string line;
        int records = 0;
        bool parses = true;
        while (std::getline(lines, line)) {
            ++records;
            try {
                const auto doc = nlohmann::json::parse(line);
                parses = parses && doc.is_object() && doc.at("command") == "price";
            } catch (const nlohmann::json::exception&) {
                parses = false;
            }
        }
        expect(records == 2 && parses, "price records round-trip through a JSON parser");
    }

    // Text format carries the same numbers.
    {
        const RunResult r = run(binary, "price --scenario " + fixtures + "/two_dirac.json");
        expect(r.exit_code == 0, "price text exits 0");
        expect(contains(r.out, "call(100)") && contains(r.out, "15"), "price text lists the quote");
    }

    // Uncovered profit.
    {
        const RunResult r =
            run(binary, "profit --scenario " + fixtures + "/two_dirac.json --format json");
        expect(r.exit_code == 0, "profit exits 0");
        expect(contains(r.out, "\"uncovered_min_profit\":-15"), "profit reports -15");
    }

    // Parity residual on the three-measure family.
    {
        const RunResult r =
            run(binary, "parity --scenario " + fixtures + "/three_measure.json --format json");
        expect(r.exit_code == 0, "parity exits 0");
        expect(contains(r.out, "\"residual\":1.25"), "parity residual is 1.25");
    }

    // Hedge report.
    {
        const RunResult r =
            run(binary, "delta --scenario " + fixtures + "/two_dirac.json --format json");
        expect(r.exit_code == 0, "delta exits 0");
        expect(contains(r.out, "\"delta\":-0.75") && contains(r.out, "\"hedged\":0"),
               "delta reports -0.75 and a flat hedged profile");
    }

    // Forward block.
    {
        const RunResult r =
            run(binary, "forward --scenario " + fixtures + "/uncalibrated.json --format json");
        expect(r.exit_code == 0, "forward exits 0");
        expect(contains(r.out, "\"implied_forward\":110"), "implied forward is 110");
        expect(contains(r.out, "\"forward_value\":5"), "forward value theta0-K is 5");
    }

    // Calibrate writes a scenario that satisfies the spot condition.
    {
        const std::string out_file = "/tmp/famval_calibrated.json";
        std::remove(out_file.c_str());
        const RunResult r = run(binary, "calibrate --scenario " + fixtures +
                                            "/uncalibrated.json --out " + out_file +
                                            " --format json");
        expect(r.exit_code == 0, "calibrate exits 0");
        expect(contains(r.out, "\"scale\":0.9090909091"), "calibrate scale is 10/11");

        const RunResult check =
            run(binary, "forward --scenario " + out_file + " --format json");
        expect(check.exit_code == 0, "calibrated scenario loads");
        expect(contains(check.out, "\"spot_residual\":0"), "calibrated residual is zero");
    }

    // calibrate without --out is a usage error.
    {
        const RunResult r =
            run(binary, "calibrate --scenario " + fixtures + "/uncalibrated.json");
        expect(r.exit_code == 2, "calibrate without --out exits 2");
    }

    // Malformed scenario file: validation error.
    {
        const RunResult r = run(binary, "price --scenario " + fixtures + "/malformed.json");
        expect(r.exit_code == 2, "malformed scenario exits 2");
        expect(contains(r.err, "malformed"), "stderr names the problem");
    }

    // Missing file: validation error.
    {
        const RunResult r = run(binary, "price --scenario " + fixtures + "/nonexistent.json");
        expect(r.exit_code == 2, "missing scenario exits 2");
    }

    // Degenerate family: computation error.
    {
        const RunResult r = run(binary, "delta --scenario " + fixtures + "/singleton.json");
        expect(r.exit_code == 3, "degenerate delta exits 3");
    }

    // Spot violating the fair-regularity condition: computation error.
    {
        const RunResult r = run(binary, "delta --scenario " + fixtures + "/uncalibrated.json");
        expect(r.exit_code == 3, "uncalibrated spot exits 3");
        expect(contains(r.err, "fair-regularity"), "stderr names the precondition");
    }

    // Axiom harness summary.
    {
        const RunResult r = run(binary, "axioms --scenario " + fixtures +
                                            "/two_dirac.json --cases 200 --seed 7 --format json");
        expect(r.exit_code == 0, "axioms exits 0");
        expect(contains(r.out, "\"cases\":200,\"failures\":0,\"first_failing_seed\":null"),
               "axioms reports zero failures");
    }

    // Text format paths.
    {
        const RunResult fwd =
            run(binary, "forward --scenario " + fixtures + "/uncalibrated.json");
        expect(fwd.exit_code == 0 && contains(fwd.out, "implied_forward  110"),
               "forward text output");
        const RunResult ax = run(binary, "axioms --scenario " + fixtures +
                                             "/two_dirac.json --cases 50");
        expect(ax.exit_code == 0 && contains(ax.out, "failures           0"),
               "axioms text output");
    }

    // Unknown subcommand.
    {
        const RunResult r = run(binary, "frobnicate --scenario x.json");
        expect(r.exit_code == 2, "unknown command exits 2");
    }

    if (g_failures == 0) {
        std::cout << "cli integration: all checks passed\n";
        return 0;
    }
    std::cerr << "cli integration: " << g_failures << " checks failed\n";
    return 1;
}
