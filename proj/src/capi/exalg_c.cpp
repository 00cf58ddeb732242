#include "exalg/exalg.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "core/demos.hpp"
#include "core/suites.hpp"
#include "core/weyl.hpp"

struct exalg_ctx {
    exalg::SuiteOptions opts;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

exalg_status fail(exalg_ctx* ctx, exalg_status code, const std::string& message) {
    if (ctx) ctx->last_error = message;
    return code;
}

template <typename Body>
exalg_status guarded(exalg_ctx* ctx, Body&& body) {
    if (!ctx) return EXALG_USAGE;
    try {
        ctx->last_error.clear();
        return body();
    } catch (const exalg::UnknownSuite& e) {
        return fail(ctx, EXALG_USAGE, e.what());
    } catch (const exalg::MissingCalibration& e) {
        return fail(ctx, EXALG_CALIBRATION_MISSING, e.what());
    } catch (const exalg::CalibrationError& e) {
        return fail(ctx, EXALG_CALIBRATION_FAILED, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ctx, EXALG_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, EXALG_INTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

exalg_ctx* exalg_ctx_new(void) {
    return new (std::nothrow) exalg_ctx();
}

void exalg_ctx_free(exalg_ctx* ctx) {
    delete ctx;
}

exalg_status exalg_set_seed(exalg_ctx* ctx, uint64_t seed) {
    if (!ctx) return EXALG_USAGE;
    ctx->opts.seed = seed;
    return EXALG_OK;
}

exalg_status exalg_set_prime_budget(exalg_ctx* ctx, int primes) {
    if (!ctx || primes < 2) return EXALG_USAGE;
    ctx->opts.primes = primes;
    return EXALG_OK;
}

exalg_status exalg_set_threads(exalg_ctx* ctx, int threads) {
    if (!ctx || threads < 1) return EXALG_USAGE;
    ctx->opts.threads = threads;
    return EXALG_OK;
}

exalg_status exalg_set_timings(exalg_ctx* ctx, int enabled) {
    if (!ctx) return EXALG_USAGE;
    ctx->opts.timings = enabled != 0;
    return EXALG_OK;
}

exalg_status exalg_set_calibration_path(exalg_ctx* ctx, const char* path) {
    if (!ctx || !path) return EXALG_USAGE;
    ctx->opts.calibration_path = path;
    return EXALG_OK;
}

const char* exalg_last_error(const exalg_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

exalg_status exalg_run_suite(exalg_ctx* ctx, const char* suite, char** report_json) {
    return guarded(ctx, [&]() -> exalg_status {
        if (!suite || !report_json) return fail(ctx, EXALG_USAGE, "null argument");
        auto rep = exalg::run_suite(suite, ctx->opts);
        *report_json = dup_string(rep.to_json());
        return rep.all_pass() ? EXALG_OK : EXALG_CHECK_FAILED;
    });
}

exalg_status exalg_calibrate(exalg_ctx* ctx, const char* target, char** payload_json) {
    return guarded(ctx, [&]() -> exalg_status {
        if (!target || !payload_json) return fail(ctx, EXALG_USAGE, "null argument");
        std::string payload = exalg::run_calibration(target, ctx->opts);
        // brown-fts freezes into the configured calibration file; the other
        // targets get a file named after themselves.
        std::string path = std::string(target) == "brown-fts"
                               ? ctx->opts.calibration_path
                               : std::string(target) + ".calibration.json";
        if (!path.empty()) {
            std::ofstream out(path);
            if (!out)
                return fail(ctx, EXALG_INTERNAL, "cannot write calibration file: " + path);
            out << payload;
        }
        *payload_json = dup_string(payload);
        return EXALG_OK;
    });
}

exalg_status exalg_dump(exalg_ctx* ctx, const char* structure, const char* format, char** out) {
    return guarded(ctx, [&]() -> exalg_status {
        if (!structure || !format || !out) return fail(ctx, EXALG_USAGE, "null argument");
        *out = dup_string(exalg::dump_structure(structure, format, ctx->opts));
        return EXALG_OK;
    });
}

exalg_status exalg_weyl_pairs(exalg_ctx* ctx, const char* type, int node, char** json) {
    return guarded(ctx, [&]() -> exalg_status {
        if (!type || !json) return fail(ctx, EXALG_USAGE, "null argument");
        auto sys = exalg::RootSystemData::parse(type);
        *json = dup_string(exalg::weyl_pairs_json(sys, node));
        return EXALG_OK;
    });
}

exalg_status exalg_demos_torus(exalg_ctx* ctx, int p, char** json) {
    return guarded(ctx, [&]() -> exalg_status {
        if (!json || p < 2) return fail(ctx, EXALG_USAGE, "need p >= 2");
        std::vector<exalg::Rational> diag;
        for (int i = 0; i < p; ++i) diag.emplace_back(i + 1);
        auto lines = exalg::torus_fixed_lines(diag);
        nlohmann::ordered_json j;
        j["p"] = p;
        j["fixed_lines"] = lines.size();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& line : lines) {
            auto v = nlohmann::ordered_json::array();
            for (const auto& x : line) v.push_back(x.to_pair_string());
            arr.push_back(std::move(v));
        }
        j["lines"] = std::move(arr);
        *json = dup_string(j.dump(2) + "\n");
        return EXALG_OK;
    });
}

exalg_status exalg_demos_quadric(exalg_ctx* ctx, int count, uint64_t seed, char** json) {
    return guarded(ctx, [&]() -> exalg_status {
        if (!json || count < 1) return fail(ctx, EXALG_USAGE, "need count >= 1");
        int two_lines = 0, unique = 0;
        for (int i = 0; i < count; ++i) {
            auto f = exalg::random_isotropic_form(seed, i);
            if (exalg::isotropic_lines(f).lines.size() == 2) ++two_lines;
            if (exalg::hyperbolic_basis_uniqueness_check(f)) ++unique;
        }
        nlohmann::ordered_json j;
        j["count"] = count;
        j["seed"] = seed;
        j["with_two_isotropic_lines"] = two_lines;
        j["with_unique_hyperbolic_basis"] = unique;
        j["pass"] = two_lines == count && unique == count;
        *json = dup_string(j.dump(2) + "\n");
        return EXALG_OK;
    });
}

void exalg_string_free(char* s) {
    std::free(s);
}

}  // extern "C"
