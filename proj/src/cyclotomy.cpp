#include "cyclosrg/cyclotomy.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace cyclosrg {

u64 TraceHistogram::class_size() const {
    u64 total = 0;
    for (const auto& row : counts)
        for (u64 v : row) total += v;
    return total / N;
}

std::string TraceHistogram::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["f"] = f;
    j["modulus"] = modulus;
    j["gamma"] = gamma;
    j["N"] = N;
    j["counts"] = counts;
    return j.dump();
}

TraceHistogram TraceHistogram::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    TraceHistogram h;
    h.p = j.at("p").get<u64>();
    h.f = j.at("f").get<unsigned>();
    h.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    h.gamma = j.at("gamma").get<std::vector<std::uint32_t>>();
    h.N = j.at("N").get<u64>();
    h.counts = j.at("counts").get<std::vector<std::vector<u64>>>();
    return h;
}

ConnectionSet ConnectionSet::initial_segment(u64 N, u64 prefix) {
    if (prefix == 0 || prefix > N) throw std::invalid_argument("ConnectionSet: prefix must be in [1, N]");
    ConnectionSet d;
    d.N = N;
    d.prefix = prefix;
    return d;
}

ConnectionSet ConnectionSet::index4(u64 p1, unsigned m) {
    if (m == 0) throw std::invalid_argument("ConnectionSet: m must be positive");
    u64 N = 1;
    for (unsigned i = 0; i < m; ++i) N *= p1;
    ConnectionSet d = initial_segment(N, N / p1);
    d.p1 = p1;
    d.m = m;
    return d;
}

std::vector<u64> ConnectionSet::class_indices() const {
    std::vector<u64> v(prefix);
    for (u64 i = 0; i < prefix; ++i) v[i] = i;
    return v;
}

TraceHistogram trace_histogram(const FieldSpec& spec, u64 N, unsigned workers) {
    if (!fits_u64(spec.q() - 1)) throw BudgetError("trace_histogram: q-1 exceeds u64 range");
    u64 q1 = to_u64(spec.q() - 1);
    if (N == 0 || q1 % N != 0)
        throw std::invalid_argument("trace_histogram: N must divide q-1");
    if (workers == 0) workers = 1;
    u64 p = spec.p();

    auto run_range = [&](u64 begin, u64 end, std::vector<u64>& flat) {
        flat.assign(N * p, 0);
        GammaOrbit orbit(spec, begin);
        u64 cls = begin % N;
        for (u64 i = begin; i < end; ++i) {
            flat[cls * p + orbit.trace()]++;
            if (++cls == N) cls = 0;
            orbit.advance();
        }
    };

    std::vector<std::vector<u64>> partials(workers);
    if (workers == 1) {
        run_range(0, q1, partials[0]);
    } else {
        std::vector<std::thread> threads;
        u64 chunk = (q1 + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            u64 b = std::min<u64>(q1, (u64)w * chunk);
            u64 e = std::min<u64>(q1, b + chunk);
            threads.emplace_back([&, b, e, w] { run_range(b, e, partials[w]); });
        }
        for (auto& t : threads) t.join();
    }

    TraceHistogram h;
    h.p = p;
    h.f = spec.f();
    h.modulus = spec.modulus();
    h.gamma = spec.gamma().c;
    h.N = N;
    h.counts.assign(N, std::vector<u64>(p, 0));
    for (const auto& flat : partials)
        for (u64 a = 0; a < N; ++a)
            for (u64 c = 0; c < p; ++c) h.counts[a][c] += flat[a * p + c];
    return h;
}

std::vector<CycInt> gauss_periods(const TraceHistogram& hist) {
    std::vector<CycInt> out;
    out.reserve(hist.N);
    for (u64 a = 0; a < hist.N; ++a) {
        std::vector<Int> raw(hist.p, Int(0));
        for (u64 c = 0; c < hist.p; ++c) raw[c] = Int((unsigned long)hist.counts[a][c]);
        out.push_back(CycInt::from_raw(hist.p, std::move(raw)));
    }
    return out;
}

u64 minus_one_class(const TraceHistogram& hist) {
    if (hist.p == 2) return 0;
    // -1 = gamma^((q-1)/2)
    u64 q1 = hist.class_size() * hist.N;
    return (q1 / 2) % hist.N;
}

bool is_symmetric(const TraceHistogram& hist, const ConnectionSet& D) {
    if (D.N != hist.N) throw std::invalid_argument("is_symmetric: mismatched N");
    u64 shift = minus_one_class(hist);
    // D is the initial segment [0, prefix); shifting by `shift` mod N must
    // fix it, which for prefix < N happens only when shift = 0.
    if (D.prefix == D.N) return true;
    return shift == 0;
}

EigenvalueSummary restricted_eigenvalues(const TraceHistogram& hist, const ConnectionSet& D) {
    if (D.N != hist.N) throw std::invalid_argument("restricted_eigenvalues: mismatched N");
    const u64 N = hist.N, p = hist.p;
    if (hist.class_size() >= (1ull << 62) / N)
        throw BudgetError("restricted_eigenvalues: counts too large for 64-bit accumulation");
    // psi(gamma^a D) = sum over c of (sum_{i<prefix} counts[(a+i)%N][c]) zeta_p^c.
    // The count accumulation stays in 64-bit integers: every partial sum is
    // bounded by the total q-1, which the enumeration budget keeps below 2^63.
    // Doubled prefix sums give each class-window sum in O(p).
    std::vector<std::vector<i64>> prefix(2 * N + 1, std::vector<i64>(p, 0));
    for (u64 j = 0; j < 2 * N; ++j) {
        const auto& row = hist.counts[j % N];
        for (u64 c = 0; c < p; ++c) prefix[j + 1][c] = prefix[j][c] + (i64)row[c];
    }
    // canonical form: subtract the zeta^(p-1) coordinate from the others
    std::vector<std::vector<i64>> canon(N, std::vector<i64>(p - 1, 0));
    for (u64 a = 0; a < N; ++a) {
        const auto& hi = prefix[a + D.prefix];
        const auto& lo = prefix[a];
        i64 last = hi[p - 1] - lo[p - 1];
        for (u64 c = 0; c + 1 < p; ++c) canon[a][c] = hi[c] - lo[c] - last;
    }
    std::sort(canon.begin(), canon.end());

    EigenvalueSummary s;
    s.N = N;
    for (u64 a = 0; a < N; ++a) {
        if (a > 0 && canon[a] == canon[a - 1]) {
            s.distinct.back().second++;
            continue;
        }
        CycInt v(p);
        std::vector<Int> raw(p, Int(0));
        for (u64 c = 0; c + 1 < p; ++c) raw[c] = (long)canon[a][c];
        v = CycInt::from_raw(p, std::move(raw));
        s.distinct.push_back({std::move(v), 1});
    }
    s.all_rational = true;
    for (const auto& [v, mult] : s.distinct) {
        if (!v.is_rational_integer()) { s.all_rational = false; break; }
    }
    if (s.all_rational)
        for (const auto& [v, mult] : s.distinct) s.integer_multiset[v.as_integer()] = mult;
    return s;
}

namespace {

// lambda and mu of an srg from its two restricted eigenvalues: the symmetric
// functions r+s and r*s are rational integers even when r, s are not.
void params_from_two_values(const CycInt& r, const CycInt& sv, const Int& k,
                            Int& lambda, Int& mu) {
    CycInt sum = r + sv;
    CycInt prod = r * sv;
    if (!sum.is_rational_integer() || !prod.is_rational_integer())
        throw std::logic_error("symmetric functions of a two-value spectrum must be rational");
    mu = k + prod.as_integer();
    lambda = mu + sum.as_integer();
}

} // namespace

SpectralVerdict spectral_srg_check(const TraceHistogram& hist, const ConnectionSet& D) {
    if (!is_symmetric(hist, D))
        throw std::invalid_argument("spectral_srg_check: connection set is not symmetric (-D != D)");
    SpectralVerdict out;
    out.eigen = restricted_eigenvalues(hist, D);
    u64 clsz = hist.class_size();
    out.v = Int((unsigned long)clsz) * Int((unsigned long)hist.N) + 1;
    out.k = Int((unsigned long)clsz) * Int((unsigned long)D.prefix);
    if (D.prefix == D.N) return out; // complete graph: excluded by definition
    if (out.eigen.distinct_count() != 2) return out;
    out.is_srg = true;
    params_from_two_values(out.eigen.distinct[0].first, out.eigen.distinct[1].first,
                           out.k, out.lambda, out.mu);
    return out;
}

std::vector<SpectralSweepEntry> spectral_sweep(const TraceHistogram& hist) {
    const u64 N = hist.N, p = hist.p;
    if (!is_symmetric(hist, ConnectionSet::initial_segment(N, 1)))
        throw std::invalid_argument("spectral_sweep: -1 is not in C_0");
    if (hist.class_size() >= (1ull << 62) / N)
        throw BudgetError("spectral_sweep: counts too large for 64-bit accumulation");
    Int clsz((unsigned long)hist.class_size());
    Int v = clsz * Int((unsigned long)N) + 1;

    std::vector<std::vector<i64>> prefix(2 * N + 1, std::vector<i64>(p, 0));
    for (u64 j = 0; j < 2 * N; ++j) {
        const auto& row = hist.counts[j % N];
        for (u64 c = 0; c < p; ++c) prefix[j + 1][c] = prefix[j][c] + (i64)row[c];
    }

    std::vector<SpectralSweepEntry> out;
    std::vector<std::vector<i64>> canon(N, std::vector<i64>(p - 1));
    for (u64 t = 1; t < N; ++t) {
        for (u64 a = 0; a < N; ++a) {
            const auto& hi = prefix[a + t];
            const auto& lo = prefix[a];
            i64 last = hi[p - 1] - lo[p - 1];
            for (u64 c = 0; c + 1 < p; ++c) canon[a][c] = hi[c] - lo[c] - last;
        }
        std::sort(canon.begin(), canon.end());
        SpectralSweepEntry e;
        e.prefix = t;
        e.v = v;
        e.k = clsz * Int((unsigned long)t);
        e.distinct_count = 1;
        for (u64 a = 1; a < N; ++a)
            if (canon[a] != canon[a - 1]) ++e.distinct_count;
        if (e.distinct_count == 2) {
            e.is_srg = true;
            auto materialize = [&](const std::vector<i64>& cv) {
                std::vector<Int> raw(p, Int(0));
                for (u64 c = 0; c + 1 < p; ++c) raw[c] = (long)cv[c];
                return CycInt::from_raw(p, std::move(raw));
            };
            u64 split = 1;
            while (canon[split] == canon[0]) ++split;
            params_from_two_values(materialize(canon[0]), materialize(canon[split]),
                                   e.k, e.lambda, e.mu);
        }
        out.push_back(std::move(e));
    }
    return out;
}

CycInt cycint_canonicalize(u64 n, std::vector<Int> raw) {
    return CycInt::from_raw(n, std::move(raw));
}

} // namespace cyclosrg
