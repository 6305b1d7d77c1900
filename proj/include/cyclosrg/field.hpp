#pragma once

#include "cyclosrg/bigint.hpp"
#include "cyclosrg/numtheory.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclosrg {

/// Element of F_{p^f} in the power basis of the field's modulus polynomial.
/// Coefficients are reduced representatives in [0, p-1], lowest degree first.
struct FieldElement {
    std::vector<std::uint32_t> c;

    bool operator==(const FieldElement&) const = default;
    bool is_zero() const {
        for (auto v : c) if (v) return false;
        return true;
    }
};

/// A concrete model of F_{p^f}: the lexicographically least monic irreducible
/// modulus (coefficients compared lowest degree first) and the least primitive
/// element in the induced element order. Immutable after construction;
/// safe to share across threads.
class FieldSpec {
public:
    // Constructs the canonical model. Throws std::invalid_argument for
    // non-prime p or f = 0, BudgetError when p^f exceeds max_q.
    static FieldSpec build(u64 p, unsigned f, const Int& max_q = default_enum_budget());

    static Int default_enum_budget() { return Int(50000000); }

    u64 p() const { return p_; }
    unsigned f() const { return f_; }
    const Int& q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    const FieldElement& gamma() const { return gamma_; }
    const std::vector<std::pair<u64, int>>& q1_factors() const { return q1_factors_; }

    FieldElement zero() const { return FieldElement{std::vector<std::uint32_t>(f_, 0)}; }
    FieldElement one() const;
    FieldElement from_scalar(u64 v) const;
    // Element whose coefficient vector is the base-p digits of v (v < q).
    FieldElement from_index(u64 v) const;
    u64 to_index(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;           // throws on zero
    FieldElement pow(const FieldElement& a, const Int& e) const;

    // Tr_{q/p}(x) = sum of the f Frobenius images, an element of Z_p.
    u64 trace(const FieldElement& x) const;

    // Multiplicative order of a nonzero element, via the factorization of q-1.
    Int element_order(const FieldElement& a) const;

    // Rebuilds the spec around an explicitly chosen primitive element
    // (validated). The eigenvalue multisets downstream are invariant under
    // this choice, which is what the property tests exercise.
    FieldSpec with_gamma(const FieldElement& g) const;

    std::string to_json() const;

    // Hot-loop support: y = gamma * x as a matrix-vector product, and
    // trace as a dot product against the per-basis-monomial trace row.
    const std::vector<u64>& gamma_matrix() const { return gamma_matrix_; }
    const std::vector<u64>& trace_row() const { return trace_row_; }

private:
    FieldSpec() = default;
    void check_member(const FieldElement& a) const;
    void precompute();

    u64 p_ = 0;
    unsigned f_ = 0;
    Int q_;
    std::vector<std::uint32_t> modulus_; // length f+1, monic
    FieldElement gamma_;
    std::vector<std::pair<u64, int>> q1_factors_;
    std::vector<u64> gamma_matrix_; // f*f row-major: column j = gamma * x^j
    std::vector<u64> trace_row_;    // trace_row_[j] = Tr(x^j)
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Walks x = gamma^start, gamma^(start+1), ... one multiplication per step.
/// Ranges seeded by gamma^(iL) let a full pass over F_q* be partitioned
/// across workers with results independent of the partitioning.
class GammaOrbit {
public:
    GammaOrbit(const FieldSpec& spec, u64 start_exponent);

    u64 trace() const {
        const u64* tr = trace_row_;
        u64 acc = 0;
        for (unsigned j = 0; j < f_; ++j) acc += tr[j] * cur_[j];
        return acc % p_;
    }

    void advance() {
        const u64* m = matrix_;
        for (unsigned r = 0; r < f_; ++r) {
            u64 acc = 0;
            for (unsigned j = 0; j < f_; ++j) acc += m[r * f_ + j] * cur_[j];
            nxt_[r] = acc % p_;
        }
        cur_.swap(nxt_);
    }

    FieldElement current() const;

private:
    u64 p_;
    unsigned f_;
    const u64* matrix_;
    const u64* trace_row_;
    std::vector<u64> cur_, nxt_;
};

// Polynomial helpers over Z_p (coefficient vectors, lowest degree first);
// exposed for the irreducibility tests.
namespace poly {
std::vector<std::uint32_t> mul_mod(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b,
                                   const std::vector<std::uint32_t>& modulus, u64 p);
bool is_irreducible(const std::vector<std::uint32_t>& m, u64 p);
} // namespace poly

} // namespace cyclosrg
