#pragma once

#include "cyclosrg/bigint.hpp"
#include "cyclosrg/cyclotomy.hpp"
#include "cyclosrg/field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyclosrg {

/// Parameters of an srg(v, k, lambda, mu). The spectral part (r, s and the
/// multiplicities f1, f2) is present only when the restricted eigenvalues
/// are rational integers; conference-type graphs leave it unset.
struct SrgParams {
    Int v, k, lambda, mu;
    bool has_integer_spectrum = false;
    Int r, s;   // r > s
    Int f1, f2; // multiplicities of r and s

    bool same_basic(const SrgParams& o) const {
        return v == o.v && k == o.k && lambda == o.lambda && mu == o.mu;
    }
    std::string to_json() const;
};

/// Symmetric 0/1 adjacency with zero diagonal, rows packed into 64-bit words.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(u64 v);

    u64 order() const { return v_; }
    bool at(u64 i, u64 j) const { return (words_[i * stride_ + (j >> 6)] >> (j & 63)) & 1; }
    void set_edge(u64 i, u64 j); // symmetric, rejects loops
    u64 degree(u64 i) const;

    // (A^2)[i][j] as an exact integer: common-neighbor count.
    u64 common_neighbors(u64 i, u64 j) const;

    bool is_complete() const;
    bool is_edgeless() const;

    // One edge "u v" per line, 0-indexed, u < v, sorted.
    std::string to_edge_list() const;
    static AdjacencyMatrix from_edge_list(u64 v, const std::string& text);

private:
    u64 v_;
    u64 stride_;
    std::vector<u64> words_;
};

/// Cay(F_q, D): vertices are field elements, x ~ y iff x - y lies in D.
/// Requires -D = D, D nonempty and proper, and q within the vertex budget.
AdjacencyMatrix build_cayley(const FieldSpec& spec, const ConnectionSet& D,
                             u64 vertex_budget = 3000);

/// Exact A^2 identity check: returns parameters iff
/// A^2 = (lambda-mu) A + (k-mu) I + mu J for some lambda, mu.
/// mu = 0 (disconnected union of cliques) is accepted; complete and
/// edgeless inputs are rejected.
std::optional<SrgParams> brute_force_check(const AdjacencyMatrix& a);

/// Derives the full parameter set from (v, k, r, s); throws when any
/// feasibility identity fails (non-integral or negative parameters or
/// multiplicities).
SrgParams params_from_spectrum(const Int& v, const Int& k, const Int& r, const Int& s);

enum class FamilyPair { p7_p1_37, p3_p1_13 };

/// The two parameter families, exact at any m >= 1:
///   (7, 37):  v = 7^(9*37^(m-1)),  k = (v-1)/37,
///             r = (9*7^((9*37^(m-1)-1)/2) - 1)/37,
///             s = (-4*7^((9*37^(m-1)+1)/2) - 1)/37
///   (3, 13):  v = 3^(3*13^(m-1)),  k = (v-1)/13,
///             r = (3^((3*13^(m-1)+3)/2) - 1)/13,
///             s = (-4*3^((3*13^(m-1)-1)/2) - 1)/13
SrgParams family_params(FamilyPair pair, unsigned m);

AdjacencyMatrix complement(const AdjacencyMatrix& a);

} // namespace cyclosrg
