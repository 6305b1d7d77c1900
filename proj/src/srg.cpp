#include "cyclosrg/srg.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace cyclosrg {

std::string SrgParams::to_json() const {
    nlohmann::ordered_json j;
    j["v"] = to_string(v);
    j["k"] = to_string(k);
    j["lambda"] = to_string(lambda);
    j["mu"] = to_string(mu);
    if (has_integer_spectrum) {
        j["r"] = to_string(r);
        j["s"] = to_string(s);
        j["f1"] = to_string(f1);
        j["f2"] = to_string(f2);
    }
    return j.dump();
}

AdjacencyMatrix::AdjacencyMatrix(u64 v)
    : v_(v), stride_((v + 63) / 64), words_(v * stride_, 0) {
    if (v < 2) throw std::invalid_argument("AdjacencyMatrix: need at least two vertices");
}

void AdjacencyMatrix::set_edge(u64 i, u64 j) {
    if (i == j) throw std::invalid_argument("AdjacencyMatrix: no loops");
    if (i >= v_ || j >= v_) throw std::invalid_argument("AdjacencyMatrix: vertex out of range");
    words_[i * stride_ + (j >> 6)] |= 1ull << (j & 63);
    words_[j * stride_ + (i >> 6)] |= 1ull << (i & 63);
}

u64 AdjacencyMatrix::degree(u64 i) const {
    u64 d = 0;
    for (u64 w = 0; w < stride_; ++w) d += std::popcount(words_[i * stride_ + w]);
    return d;
}

u64 AdjacencyMatrix::common_neighbors(u64 i, u64 j) const {
    u64 c = 0;
    const u64* ri = &words_[i * stride_];
    const u64* rj = &words_[j * stride_];
    for (u64 w = 0; w < stride_; ++w) c += std::popcount(ri[w] & rj[w]);
    return c;
}

bool AdjacencyMatrix::is_complete() const {
    for (u64 i = 0; i < v_; ++i)
        if (degree(i) != v_ - 1) return false;
    return true;
}

bool AdjacencyMatrix::is_edgeless() const {
    for (u64 w : words_)
        if (w) return false;
    return true;
}

std::string AdjacencyMatrix::to_edge_list() const {
    std::ostringstream os;
    for (u64 i = 0; i < v_; ++i)
        for (u64 j = i + 1; j < v_; ++j)
            if (at(i, j)) os << i << " " << j << "\n";
    return os.str();
}

AdjacencyMatrix AdjacencyMatrix::from_edge_list(u64 v, const std::string& text) {
    AdjacencyMatrix a(v);
    std::istringstream is(text);
    u64 i, j;
    while (is >> i >> j) a.set_edge(i, j);
    return a;
}

AdjacencyMatrix build_cayley(const FieldSpec& spec, const ConnectionSet& D, u64 vertex_budget) {
    if (spec.q() > Int((unsigned long)vertex_budget))
        throw BudgetError("build_cayley: q exceeds the brute-force vertex budget");
    u64 q = to_u64(spec.q());
    u64 q1 = q - 1;
    if (D.N == 0 || q1 % D.N != 0) throw std::invalid_argument("build_cayley: N must divide q-1");
    if (D.prefix == 0) throw std::invalid_argument("build_cayley: empty connection set (edgeless)");
    if (D.prefix == D.N) throw std::invalid_argument("build_cayley: full connection set (complete)");

    // materialize D and check -D = D
    std::vector<bool> in_d(q, false);
    std::vector<u64> d_idx;
    FieldElement x = spec.one();
    for (u64 i = 0; i < q1; ++i) {
        if (i % D.N < D.prefix) {
            u64 idx = spec.to_index(x);
            in_d[idx] = true;
            d_idx.push_back(idx);
        }
        x = spec.mul(x, spec.gamma());
    }
    for (u64 idx : d_idx) {
        u64 neg = spec.to_index(spec.neg(spec.from_index(idx)));
        if (!in_d[neg]) throw std::invalid_argument("build_cayley: connection set is not symmetric (-D != D)");
    }

    AdjacencyMatrix a(q);
    for (u64 xv = 0; xv < q; ++xv) {
        FieldElement xe = spec.from_index(xv);
        for (u64 d : d_idx) {
            u64 yv = spec.to_index(spec.add(xe, spec.from_index(d)));
            if (xv < yv) a.set_edge(xv, yv);
        }
    }
    return a;
}

std::optional<SrgParams> brute_force_check(const AdjacencyMatrix& a) {
    if (a.is_edgeless()) throw std::invalid_argument("brute_force_check: edgeless graph");
    if (a.is_complete()) throw std::invalid_argument("brute_force_check: complete graph");
    u64 v = a.order();
    u64 k = a.degree(0);
    for (u64 i = 1; i < v; ++i)
        if (a.degree(i) != k) return std::nullopt;

    // pick lambda from the first edge and mu from the first non-edge, then
    // verify A^2 entrywise
    std::optional<u64> lambda, mu;
    for (u64 i = 0; i < v && (!lambda || !mu); ++i)
        for (u64 j = i + 1; j < v && (!lambda || !mu); ++j) {
            if (a.at(i, j)) { if (!lambda) lambda = a.common_neighbors(i, j); }
            else if (!mu) mu = a.common_neighbors(i, j);
        }
    if (!lambda || !mu) return std::nullopt;
    for (u64 i = 0; i < v; ++i)
        for (u64 j = i + 1; j < v; ++j) {
            u64 c = a.common_neighbors(i, j);
            if (c != (a.at(i, j) ? *lambda : *mu)) return std::nullopt;
        }

    SrgParams p;
    p.v = (unsigned long)v;
    p.k = (unsigned long)k;
    p.lambda = (unsigned long)*lambda;
    p.mu = (unsigned long)*mu;
    // integer spectrum when the discriminant (lambda-mu)^2 + 4(k-mu) is square
    Int d = (p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.k - p.mu);
    if (is_perfect_square(d)) {
        Int sd = isqrt(d);
        Int r2 = (p.lambda - p.mu) + sd;
        if (mpz_even_p(r2.get_mpz_t())) {
            p.has_integer_spectrum = true;
            p.r = r2 / 2;
            p.s = (p.lambda - p.mu - sd) / 2;
            p.f2 = exact_div(p.k + (p.v - 1) * p.r, p.r - p.s);
            p.f1 = p.v - 1 - p.f2;
        }
    }
    return p;
}

SrgParams params_from_spectrum(const Int& v, const Int& k, const Int& r, const Int& s) {
    if (k < 1) throw std::invalid_argument("params_from_spectrum: k must be >= 1");
    if (r <= s) throw std::invalid_argument("params_from_spectrum: need r > s");
    SrgParams p;
    p.v = v;
    p.k = k;
    p.mu = k + r * s;
    p.lambda = p.mu + r + s;
    if (sgn(p.mu) < 0 || sgn(p.lambda) < 0)
        throw std::invalid_argument("params_from_spectrum: negative lambda or mu");
    // k(k - lambda - 1) = mu(v - k - 1)
    if (k * (k - p.lambda - 1) != p.mu * (v - k - 1))
        throw std::invalid_argument("params_from_spectrum: counting identity fails");
    p.has_integer_spectrum = true;
    p.r = r;
    p.s = s;
    // k + f1 r + f2 s = 0, f1 + f2 = v - 1
    Int num = k + (v - 1) * r;
    p.f2 = exact_div(num, r - s);
    p.f1 = v - 1 - p.f2;
    if (sgn(p.f1) <= 0 || sgn(p.f2) <= 0)
        throw std::invalid_argument("params_from_spectrum: non-positive multiplicity");
    if (k + p.f1 * r + p.f2 * s != 0)
        throw std::invalid_argument("params_from_spectrum: trace identity fails");
    return p;
}

SrgParams family_params(FamilyPair pair, unsigned m) {
    if (m == 0) throw std::invalid_argument("family_params: m must be >= 1");
    Int v, k, r, s;
    if (pair == FamilyPair::p7_p1_37) {
        Int e = int_pow((u64)37, m - 1) * 9; // 9*37^(m-1)
        unsigned long eu = e.get_ui();
        v = int_pow((u64)7, eu);
        k = exact_div(v - 1, Int(37));
        r = exact_div(Int(9) * int_pow((u64)7, (eu - 1) / 2) - 1, Int(37));
        s = exact_div(Int(-4) * int_pow((u64)7, (eu + 1) / 2) - 1, Int(37));
    } else {
        Int e = int_pow((u64)13, m - 1) * 3; // 3*13^(m-1)
        unsigned long eu = e.get_ui();
        v = int_pow((u64)3, eu);
        k = exact_div(v - 1, Int(13));
        r = exact_div(int_pow((u64)3, (eu + 3) / 2) - 1, Int(13));
        s = exact_div(Int(-4) * int_pow((u64)3, (eu - 1) / 2) - 1, Int(13));
    }
    return params_from_spectrum(v, k, r, s);
}

AdjacencyMatrix complement(const AdjacencyMatrix& a) {
    AdjacencyMatrix c(a.order());
    for (u64 i = 0; i < a.order(); ++i)
        for (u64 j = i + 1; j < a.order(); ++j)
            if (!a.at(i, j)) c.set_edge(i, j);
    return c;
}

} // namespace cyclosrg
