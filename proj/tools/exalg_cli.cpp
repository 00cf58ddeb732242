// Batch verification runner over the exalg C API: executes named suites,
// prints one pass/fail line per check, freezes calibrations, dumps structure
// data. Exit codes: 0 pass, 1 check failure, 2 usage, 3 missing calibration,
// 4 calibration failure.

#include <exalg/exalg.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct CtxDeleter {
    void operator()(exalg_ctx* c) const { exalg_ctx_free(c); }
};
using Ctx = std::unique_ptr<exalg_ctx, CtxDeleter>;

struct StrDeleter {
    void operator()(char* s) const { exalg_string_free(s); }
};
using OwnedStr = std::unique_ptr<char, StrDeleter>;

int report_error(const Ctx& ctx, exalg_status code) {
    std::cerr << "error: " << exalg_last_error(ctx.get()) << "\n";
    return static_cast<int>(code);
}

bool parse_kv(const std::string& token, const std::string& key, long& value) {
    if (token.rfind(key + "=", 0) != 0) return false;
    value = std::stol(token.substr(key.size() + 1));
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of split exceptional algebra structures"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int primes = 4;
    int threads = 2;
    bool timings = false;
    std::string calibration = "brown-fts.calibration.json";
    app.add_option("--seed", seed, "deterministic seed for sampling and prime selection");
    app.add_option("--primes", primes, "multi-modular prime budget")->check(CLI::Range(2, 64));
    app.add_option("--threads", threads, "parallelism cap")->check(CLI::Range(1, 64));
    app.add_flag("--timings", timings,
                 "record real per-check times (reports are no longer byte-stable)");
    app.add_option("--calibration", calibration, "calibration file path");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::string json_path;
    verify->add_option("--suite", suite, "octonion|albert|similitudes|brown|weyl|demos|all")
        ->required();
    verify->add_option("--json", json_path, "write the JSON report to this path");

    auto* calibrate = app.add_subcommand("calibrate", "freeze a calibration");
    std::string target;
    calibrate->add_option("--target", target, "brown-fts|octonion-signs|moufang-slots")
        ->required();

    auto* dump = app.add_subcommand("dump", "serialize a structure");
    std::string structure, format = "json", out_path;
    dump->add_option("structure", structure,
                     "octonion-table|albert-tensor|brown-t-tensor|lie-basis:<name>")
        ->required();
    dump->add_option("format", format, "json|csv");
    dump->add_option("--out", out_path, "write to this path instead of stdout");

    auto* weyl = app.add_subcommand("weyl", "weight orbit and double coset counts");
    std::string wtype;
    int wnode = 0;
    bool wpairs = false;
    weyl->add_option("--type", wtype, "root system, e.g. E7, E6, D6, A4")->required();
    weyl->add_option("--node", wnode, "Bourbaki node label")->required();
    weyl->add_flag("--pairs", wpairs, "include pair-orbit (double coset) data");

    auto* demos = app.add_subcommand("demos", "classical warm-up computations");
    std::string torus_arg;
    std::vector<std::string> quadric_args;
    demos->add_option("--torus", torus_arg, "p=<prime>: torus fixed-line count");
    demos->add_option("--quadric", quadric_args, "random=<count> [seed=<n>]")->expected(1, 2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    Ctx ctx(exalg_ctx_new());
    if (!ctx) return 5;
    exalg_set_seed(ctx.get(), seed);
    exalg_set_prime_budget(ctx.get(), primes);
    exalg_set_threads(ctx.get(), threads);
    exalg_set_timings(ctx.get(), timings ? 1 : 0);
    exalg_set_calibration_path(ctx.get(), calibration.c_str());

    if (verify->parsed()) {
        char* raw = nullptr;
        exalg_status code = exalg_run_suite(ctx.get(), suite.c_str(), &raw);
        OwnedStr report(raw);
        if (code != EXALG_OK && code != EXALG_CHECK_FAILED) return report_error(ctx, code);
        auto j = nlohmann::json::parse(report.get());
        for (const auto& c : j.at("checks")) {
            bool pass = c.at("status").get<std::string>() == "pass";
            std::cout << (pass ? "pass  " : "FAIL  ") << c.at("name").get<std::string>() << " — "
                      << c.at("paper_anchor").get<std::string>()
                      << " (computed=" << c.at("computed").get<std::string>()
                      << ", expected=" << c.at("expected").get<std::string>() << ")\n";
        }
        std::cout << (code == EXALG_OK ? "all checks passed" : "SUITE FAILED") << " — suite "
                  << suite << ", seed " << seed << "\n";
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) {
                std::cerr << "error: cannot write " << json_path << "\n";
                return 5;
            }
            out << report.get();
        }
        return static_cast<int>(code);
    }

    if (calibrate->parsed()) {
        char* raw = nullptr;
        exalg_status code = exalg_calibrate(ctx.get(), target.c_str(), &raw);
        OwnedStr payload(raw);
        if (code != EXALG_OK) return report_error(ctx, code);
        std::cout << payload.get();
        if (target == "brown-fts")
            std::cerr << "calibration written to " << calibration << "\n";
        return 0;
    }

    if (dump->parsed()) {
        char* raw = nullptr;
        exalg_status code = exalg_dump(ctx.get(), structure.c_str(), format.c_str(), &raw);
        OwnedStr payload(raw);
        if (code != EXALG_OK) return report_error(ctx, code);
        if (out_path.empty()) {
            std::cout << payload.get();
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return 5;
            }
            out << payload.get();
        }
        return 0;
    }

    if (weyl->parsed()) {
        char* raw = nullptr;
        exalg_status code = exalg_weyl_pairs(ctx.get(), wtype.c_str(), wnode, &raw);
        OwnedStr payload(raw);
        if (code != EXALG_OK) return report_error(ctx, code);
        if (wpairs) {
            std::cout << payload.get() << "\n";
        } else {
            auto j = nlohmann::json::parse(payload.get());
            nlohmann::ordered_json out;
            out["type"] = j.at("type");
            out["node"] = j.at("node");
            out["orbit_size"] = j.at("orbit_size");
            std::cout << out.dump() << "\n";
        }
        return 0;
    }

    if (demos->parsed()) {
        if (torus_arg.empty() && quadric_args.empty()) {
            std::cerr << "error: demos needs --torus or --quadric\n";
            return 2;
        }
        if (!torus_arg.empty()) {
            long p = 0;
            if (!parse_kv(torus_arg, "p", p)) {
                std::cerr << "error: --torus expects p=<prime>\n";
                return 2;
            }
            char* raw = nullptr;
            exalg_status code = exalg_demos_torus(ctx.get(), static_cast<int>(p), &raw);
            OwnedStr payload(raw);
            if (code != EXALG_OK) return report_error(ctx, code);
            std::cout << payload.get();
        }
        if (!quadric_args.empty()) {
            long count = 0, qseed = static_cast<long>(seed);
            if (!parse_kv(quadric_args[0], "random", count)) {
                std::cerr << "error: --quadric expects random=<count> [seed=<n>]\n";
                return 2;
            }
            if (quadric_args.size() > 1 && !parse_kv(quadric_args[1], "seed", qseed)) {
                std::cerr << "error: --quadric expects random=<count> [seed=<n>]\n";
                return 2;
            }
            char* raw = nullptr;
            exalg_status code = exalg_demos_quadric(ctx.get(), static_cast<int>(count),
                                                    static_cast<std::uint64_t>(qseed), &raw);
            OwnedStr payload(raw);
            if (code != EXALG_OK) return report_error(ctx, code);
            std::cout << payload.get();
            auto j = nlohmann::json::parse(payload.get());
            if (!j.at("pass").get<bool>()) return 1;
        }
        return 0;
    }

    return 2;
}
