#pragma once

#include "cyclosrg/cyclotomy.hpp"
#include "cyclosrg/quartic.hpp"
#include "cyclosrg/search.hpp"
#include "cyclosrg/srg.hpp"

#include <optional>
#include <string>

namespace cyclosrg {

struct Budgets {
    Int enum_cap = FieldSpec::default_enum_budget(); // full F_q* passes
    u64 brute_cap = 3000;                            // adjacency vertices
    unsigned guard_bits = 64;                        // Diophantine magnitude
    unsigned workers = 1;
    std::string cache_dir;                           // empty disables caching
};

/// Full verification pipeline for the pair (p, p1) at level m:
/// quartic invariants -> M-solutions -> classification -> predicted
/// spectrum/parameters -> direct spectral check when q fits the enumeration
/// budget -> adjacency brute force when q fits the vertex budget.
struct VerifyReport {
    u64 p = 0, p1 = 0;
    unsigned m = 0;
    Int q;
    QuarticData qd;
    MSystemResult msystem;
    std::optional<Verdict> verdict;
    bool spectrum_ambiguous = false;     // solutions disagree on the spectrum
    std::optional<SpectrumPrediction> predicted;
    std::optional<SrgParams> predicted_params;
    bool eta_branch_plus = false;        // numeric branch of eta_0

    bool direct_checked = false;
    bool direct_matches = false;
    std::optional<EigenvalueSummary> direct_eigen;

    bool brute_checked = false;
    bool brute_matches = false;
    std::optional<SrgParams> brute_params;

    // 0 = verified srg, 2 = verdict negative, 3 = undecided/ambiguous
    int exit_code() const;
    std::string to_text() const;
    std::string to_json() const;
};

VerifyReport run_verify(u64 p, u64 p1, unsigned m, const Budgets& budgets);

/// Histogram cache, keyed by the content of (p, f, modulus, gamma, N).
/// Returns the cached histogram only when every field matches exactly.
std::optional<TraceHistogram> cache_load(const std::string& dir, const FieldSpec& spec, u64 N);
void cache_store(const std::string& dir, const TraceHistogram& hist);
std::string cache_path(const std::string& dir, const FieldSpec& spec, u64 N);

/// Histogram via the cache when a directory is configured.
TraceHistogram histogram_cached(const FieldSpec& spec, u64 N, const Budgets& budgets);

} // namespace cyclosrg
