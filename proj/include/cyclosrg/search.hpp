#pragma once

#include "cyclosrg/quartic.hpp"
#include "cyclosrg/srg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyclosrg {

/// index-4 admissibility of a pair of distinct primes:
/// p1 = 5 (mod 8), p1 > 5, gcd(p(p-1), p1) = 1, ord_{p1}(p) = (p1-1)/4,
/// and -1 not in <p> (automatic for odd (p1-1)/4, still checked).
Index4Diagnosis index4_check(u64 p, u64 p1);

/// True iff p^(ord_{p1}(p)) != 1 (mod p1^2), which lifts the order to
/// ord_{p1^m}(p) = phi(p1^m)/4 for every m >= 1.
bool order_lift_check(u64 p, u64 p1);

/// Necessary condition for the pair to classify as srg: a compliant-ratio
/// solution (t,+-t,+-t,+-t) or (3t,+-t,+-t,+-t) must exist, i.e.
/// t^2*(3p1+1) = 16p^e or t^2*(3p1+9) = 16p^e must be solvable in integers
/// (e = ftilde - 2b). Exact big-integer test, no magnitude guard needed.
/// A pair failing this can be rejected without enumerating the full system.
bool compliant_shape_feasible(u64 p, const QuarticData& qd);

struct SearchHit {
    u64 p = 0, p1 = 0;
    QuarticData qd;
    std::vector<MSolution> solutions;
    Verdict verdict;
    SrgParams predicted; // m = 1 parameters
};

struct UndecidedPair {
    u64 p = 0, p1 = 0;
    std::string reason;
};

struct RejectedPair {
    u64 p = 0, p1 = 0;
    std::string reason;
};

struct SearchCounters {
    u64 p1_candidates = 0;        // primes = 5 (mod 8), > 5 in range
    u64 p1_square_pass = 0;       // survivors of the square condition
    u64 pairs_order_checked = 0;  // (p, p1) order computations
    u64 pairs_index4 = 0;         // survivors of index-4 + lift
    u64 pairs_shape_feasible = 0; // survivors of the compliant-shape test
    u64 pairs_enumerated = 0;     // full Diophantine enumerations run
};

struct SearchReport {
    u64 p_max = 0, p1_max = 0;
    std::vector<SearchHit> hits;
    std::vector<UndecidedPair> undecided;
    std::vector<RejectedPair> rejected; // index-4 pairs that are certified non-srg
    SearchCounters counters;

    std::string to_csv() const;
    std::string to_json() const;
};

struct SearchOptions {
    unsigned guard_bits = 64;
    unsigned workers = 1;
    // audit mode: run the full enumeration+classification even for p1 that
    // fail the square condition and assert the verdict stays negative
    bool audit_stage1 = false;
};

/// Reproduces the prime-pair search over 2 <= p < p_max, 3 <= p1 < p1_max.
SearchReport search_pairs(u64 p_max, u64 p1_max, const SearchOptions& opt = {});

} // namespace cyclosrg
