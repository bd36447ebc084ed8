#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pdom/graph.hpp"

namespace pdom {

struct LabConfig {
    int trials = 20;           // line graphs of seeded random cubic graphs
    int max_cubic = 12;        // even, in [4, 12]; keeps line graphs solvable
    int ek_max = 2;            // E_0..E_ek_max at r = 4; n = 9 + 5k must stay <= 24
    std::uint64_t seed = 1;
    int solver_cap = 24;
    std::string violation_dir = ".";  // where a counterexample graph gets dumped
};

struct BoundRecord {
    std::string instance;
    int n = 0;
    int gamma_p = 0;
    int bound = 0;  // floor((n+1)/5)
    bool tight = false;
    bool connected = false;
    bool regular4 = false;
    bool clawfree = false;
    std::int64_t runtime_ms = 0;

    bool checks_pass() const { return connected && regular4 && clawfree; }

    // The theorem under test: impossible if both the bound and the solver are
    // right, so any hit is reported loudly instead of being dropped.
    bool violates_bound() const { return checks_pass() && gamma_p > bound; }

    // gamma_p > n/(r+1) at r = 4: the instance contradicts the n/(r+1)
    // conjecture for regular graphs.
    bool refutes_conjecture() const { return checks_pass() && 5 * gamma_p > n; }
};

struct LabResult {
    std::vector<BoundRecord> records;    // instance-name ascending
    std::vector<std::string> skipped;    // instances over the solver cap
    std::vector<std::string> violations; // instance names; graphs dumped to violation_dir
};

// Runs the whole instance battery: E_0..E_k, the octahedron (line graph of
// K_4) and `trials` line graphs of seeded random cubic graphs. Instances are
// evaluated OpenMP-parallel; the result is deterministic up to runtime_ms.
LabResult run_lab(const LabConfig& config);

// CSV per the report schema, LF line endings, rows by instance name.
std::string render_report(std::span<const BoundRecord> records);
void write_report(std::span<const BoundRecord> records, const std::string& path);

}  // namespace pdom
