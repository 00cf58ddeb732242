#ifndef EXALG_SUITES_HPP
#define EXALG_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/brown.hpp"

namespace exalg {

struct CheckResult {
    std::string name;
    std::string paper_anchor;
    bool pass = false;
    std::string computed;
    std::string expected;
    std::int64_t elapsed_ms = 0;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::string calibration_hash;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_json() const;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    int primes = 4;
    int threads = 2;
    /// Real per-check wall times; off by default so reports are
    /// byte-identical across runs.
    bool timings = false;
    /// Path of the frozen calibration file; required by the brown suite.
    std::string calibration_path;
};

struct UnknownSuite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Calibration file missing or failing its hash check (CLI exit 3, as
/// opposed to CalibrationError, a failed calibration search, exit 4).
struct MissingCalibration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Executes the named suite: octonion, albert, similitudes, brown, weyl,
/// demos, or all.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts);

/// Runs a calibration target (brown-fts, octonion-signs, moufang-slots) and
/// returns the calibration file payload.
std::string run_calibration(const std::string& target, const SuiteOptions& opts);

/// Serializes a named structure: octonion-table, albert-tensor,
/// brown-t-tensor, lie-basis:<name> with name in {der-j, sim-j, stab-l,
/// stab-lines, aut-lv, stab-1, sim-b, stab-1-b, stab-pair-b}.
std::string dump_structure(const std::string& structure, const std::string& format,
                           const SuiteOptions& opts);

}  // namespace exalg

#endif
