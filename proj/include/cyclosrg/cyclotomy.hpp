#pragma once

#include "cyclosrg/cycint.hpp"
#include "cyclosrg/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cyclosrg {

/// counts[a][c] = #{x in C_a : Tr(x) = c}. This N x p table of exact counts
/// carries every Gauss period of the field, so a single full pass over
/// F_q* (the expensive part) is enough for all downstream spectra.
struct TraceHistogram {
    u64 p = 0;
    unsigned f = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> gamma;
    u64 N = 0;
    std::vector<std::vector<u64>> counts;

    u64 class_size() const;
    bool operator==(const TraceHistogram&) const = default;

    std::string to_json() const;                 // bit-exact round trip
    static TraceHistogram from_json(const std::string& text);
};

/// Union of the first `prefix` cyclotomic classes C_0, ..., C_{prefix-1}
/// of index N. The index-4 connection sets use prefix = p1^(m-1), N = p1^m.
struct ConnectionSet {
    u64 N = 0;
    u64 prefix = 0;
    std::optional<u64> p1;   // set by the index-4 factory
    std::optional<unsigned> m;

    static ConnectionSet initial_segment(u64 N, u64 prefix);
    static ConnectionSet index4(u64 p1, unsigned m);
    std::vector<u64> class_indices() const;
};

/// Full pass i = 0..q-2 over x = gamma^i with class index i mod N.
/// Workers partition the range; the merge is a commutative sum, so the
/// result is identical for any chunking.
TraceHistogram trace_histogram(const FieldSpec& spec, u64 N, unsigned workers = 1);

/// tau_a = sum over classes of zeta_p^Tr(x), from the histogram rows.
std::vector<CycInt> gauss_periods(const TraceHistogram& hist);

/// Class index of -1; the class shift induced by negation. D = -D iff
/// shifting D's index set by this value fixes it.
u64 minus_one_class(const TraceHistogram& hist);
bool is_symmetric(const TraceHistogram& hist, const ConnectionSet& D);

struct EigenvalueSummary {
    u64 N = 0;
    // distinct values psi(gamma^a D) with class multiplicities (how many
    // a in [0, N-1] attain each value), sorted canonically
    std::vector<std::pair<CycInt, u64>> distinct;
    bool all_rational = false;
    // integer images keyed by value when all_rational
    std::map<Int, u64> integer_multiset;

    size_t distinct_count() const { return distinct.size(); }
};

/// The restricted eigenvalue multiset { sum_{i in D} tau_{(a+i) mod N} }.
EigenvalueSummary restricted_eigenvalues(const TraceHistogram& hist, const ConnectionSet& D);

/// Spectral srg verdict per the two-distinct-restricted-eigenvalues
/// characterization, with (lambda, mu) recovered from the exact symmetric
/// functions r+s and r*s (valid even when r, s are irrational).
struct SpectralVerdict {
    bool is_srg = false;
    Int v, k, lambda, mu;
    EigenvalueSummary eigen;
};
SpectralVerdict spectral_srg_check(const TraceHistogram& hist, const ConnectionSet& D);

/// Batched form of the verdict for every initial-segment prefix
/// t = 1..N-1 of one histogram, amortizing the shared prefix sums.
/// Entry t-1 agrees with spectral_srg_check on the same connection set.
struct SpectralSweepEntry {
    u64 prefix = 0;
    size_t distinct_count = 0;
    bool is_srg = false;
    Int v, k, lambda, mu; // set when is_srg
};
std::vector<SpectralSweepEntry> spectral_sweep(const TraceHistogram& hist);

/// Canonical reduction of a raw length-n coefficient vector (n prime).
CycInt cycint_canonicalize(u64 n, std::vector<Int> raw);

} // namespace cyclosrg
