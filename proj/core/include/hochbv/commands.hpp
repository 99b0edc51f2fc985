#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hochbv/bv.hpp"
#include "hochbv/dga_io.hpp"

namespace hochbv {

inline constexpr const char* kVersion = "0.1.0";

/* One resolved invocation.  Identical configs produce byte-identical
 * reports; real timing is opt-in because it would break that. */
struct RunConfig {
    std::string command;
    std::string algebra = "sphere-cohomology";  // builtin name or file:<path>
    std::string hip = "sphere-tilde";           // inner-product catalog name
    int bound = 8;                              // arity / expansion bound
    int k_max = 8;                              // largest table index
    int degree_min = -2;
    int degree_max = 2;
    bool dual_coefficients = false;  // hh-basis: use CH(A, A*)
    std::string format = "text";     // text | json
    std::string out;                 // output path; empty writes to stdout
    bool timing = false;             // measure timing_ms (default 0)
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> witnesses;  // failures first; informational rows allowed
    std::string expected_ref;            // builtin table / catalog entry compared against
};

struct Report {
    std::string command;
    RunConfig config;
    std::vector<CheckResult> checks;
    long long timing_ms = 0;
    std::string version = kVersion;

    bool all_pass() const;
};

// builtin name or "file:<path>" in the dga text format
DgAlgebra resolve_algebra(const std::string& selector);

Report cmd_check_dga(const RunConfig& cfg);
Report cmd_verify_hip(const RunConfig& cfg);
Report cmd_local_identities(const RunConfig& cfg);
Report cmd_hh_basis(const RunConfig& cfg);
Report cmd_bv_table(const RunConfig& cfg);
Report cmd_compare_bv(const RunConfig& cfg);
Report cmd_counterexample(const RunConfig& cfg);
Report cmd_report_all(const RunConfig& cfg);

// dispatch on cfg.command; measures timing when cfg.timing is set
Report run_command(const RunConfig& cfg);

std::string render_text(const Report& r);
std::string render_json(const Report& r);

// renders per cfg.format to cfg.out or console; returns the exit status
int emit_report(const Report& r, std::ostream& console);

}  // namespace hochbv
