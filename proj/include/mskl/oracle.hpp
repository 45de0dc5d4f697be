#pragma once
// Exhaustive re-verification of the library's structural claims on small
// symmetric groups.  Every registered check sweeps all permutations (or all
// pairs / chains / parameter tuples) up to a per-check default group size,
// recomputes both sides of the claimed identity by independent routes, and
// fails fast with the first counterexample serialized as compact JSON.
//
// Sweeps parallelize over lexicographic ranks with OpenMP when available;
// a serial reference path is kept both as a fallback and as the baseline
// the benchmark target compares the parallel kernels against.

#include <cstdint>
#include <string>
#include <vector>

#include "mskl/diagram.hpp"

namespace mskl {

struct SweepConfig {
    int n = 0;                 // symmetric-group bound; 0 = per-check default
    int jobs = 0;              // worker threads; 0 = runtime default
    bool force_serial = false; // take the serial reference path
    std::string report_path;   // when non-empty, write a JSON report here
};

struct SweepReport {
    std::string id;
    int n = 0;
    bool pass = false;
    std::uint64_t checked = 0;  // primitive cases examined
    double seconds = 0.0;
    std::string engine;         // "openmp" or "serial"
    std::string counterexample; // compact JSON; empty when the sweep passed
};

struct TheoremInfo {
    std::string id;
    std::string summary;
    int default_n = 0;
};

// All registered checks, in canonical execution order.
const std::vector<TheoremInfo>& theorem_registry();
bool is_registered(const std::string& id);

// Run one registered check.  Throws domain_error for an unknown id or an
// out-of-range group bound (n must be 0 or in [3, 10]).
SweepReport verify(const std::string& id, const SweepConfig& cfg = {});

// Run every registered check at its default bound (cfg.n overrides all).
// When cfg.report_path is set, the combined report is written there.
std::vector<SweepReport> verify_all(const SweepConfig& cfg = {});

// Serialize reports as a JSON array (the format verify_all writes to disk).
std::string reports_to_json(const std::vector<SweepReport>& reports);

// Diagnostic, not part of the registry: tabulate predicted vs. observed
// outcomes of single-reflection surgery over all toric w in S_3..S_n under
// the given first-step height rule.  One text row per distinct
// (column label, prediction, observation) triple with a first witness.
std::string reflection_survey(int n, HeightRule rule);

}  // namespace mskl
