#include "cyclosrg/quartic.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace cyclosrg {

Index4Diagnosis index4_diagnose(u64 p, u64 p1) {
    Index4Diagnosis d;
    if (p == p1) { d.reason = "p and p1 must be distinct primes"; return d; }
    if (!is_prime(p)) { d.reason = "p is not prime"; return d; }
    if (!is_prime(p1)) { d.reason = "p1 is not prime"; return d; }
    if (p1 % 8 != 5) { d.reason = "p1 is not congruent to 5 mod 8"; return d; }
    if (p1 <= 5) { d.reason = "p1 must exceed 5"; return d; }
    if (p % p1 == 0 || (p - 1) % p1 == 0) { d.reason = "gcd(p(p-1), p1) != 1"; return d; }
    u64 ftilde = (p1 - 1) / 4;
    u64 ord = mult_order(p % p1, p1);
    if (ord != ftilde) {
        d.reason = "ord_" + std::to_string(p1) + "(" + std::to_string(p) + ") = " +
                   std::to_string(ord) + " != (p1-1)/4 = " + std::to_string(ftilde);
        return d;
    }
    // -1 has even order; <p> has odd order ftilde, so -1 cannot lie in <p>.
    if (ftilde % 2 == 0) { d.reason = "(p1-1)/4 is even, -1 may lie in <p>"; return d; }
    d.ok = true;
    return d;
}

QuarticData quartic_decomposition(u64 p1, u64 p) {
    auto diag = index4_diagnose(p, p1);
    if (!diag.ok) throw std::invalid_argument("quartic_decomposition: " + diag.reason);

    QuarticData qd;
    qd.p1 = p1;
    qd.p = p;
    qd.ftilde = (p1 - 1) / 4;
    qd.g = primitive_root_lifted(p1, 1);

    // cosets g^j <p>
    qd.class_of.assign(p1, -1);
    for (unsigned j = 0; j < 4; ++j) {
        u64 start = pow_mod(qd.g, j, p1);
        u64 x = start;
        for (u64 i = 0; i < qd.ftilde; ++i) {
            qd.classes[j].push_back(x);
            qd.class_of[x] = (int)j;
            x = mul_mod(x, p % p1, p1);
        }
        std::sort(qd.classes[j].begin(), qd.classes[j].end());
    }

    for (unsigned j = 0; j < 4; ++j) {
        u64 sum = 0;
        for (u64 z : qd.classes[j]) sum += z;
        if (sum % p1 != 0) throw std::logic_error("quartic class sum is not divisible by p1");
        qd.b_list[j] = sum / p1;
    }
    qd.b = *std::min_element(qd.b_list.begin(), qd.b_list.end());
    for (unsigned j = 0; j < 4; ++j)
        if (qd.b_list[j] == qd.b) { qd.lambda_index = j; break; }
    u64 c1 = qd.b_list[(qd.lambda_index + 1) % 4] - qd.b;
    u64 c3 = qd.b_list[(qd.lambda_index + 3) % 4] - qd.b;
    qd.c = std::min(c1, c3);

    // p1 = A^2 + B^2, A = 3 (mod 4), B > 0; exhaustive and checked unique
    i64 root = (i64)isqrt_u64(p1);
    int found = 0;
    for (i64 a = -root; a <= root; ++a) {
        if (((a % 4) + 4) % 4 != 3) continue;
        u64 rest = p1 - (u64)(a * a);
        u64 br;
        if (is_square_u64(rest, &br) && br > 0) {
            qd.A = a;
            qd.B = (i64)br;
            ++found;
        }
    }
    if (found != 1) throw std::logic_error("two-squares decomposition with A = 3 (mod 4) is not unique");
    return qd;
}

EtaBasis eta_values(u64 p1, u64 g) {
    if (!is_prime(p1) || p1 % 8 != 5 || p1 <= 5)
        throw std::invalid_argument("eta_values: p1 must be a prime = 5 (mod 8) exceeding 5");
    if (mult_order(g, p1) != p1 - 1)
        throw std::invalid_argument("eta_values: g is not a primitive root mod p1");
    EtaBasis eb;
    eb.p1 = p1;
    eb.g = g;
    u64 ftilde = (p1 - 1) / 4;
    u64 g4 = pow_mod(g, 4, p1);
    for (unsigned j = 0; j < 4; ++j) {
        std::vector<Int> raw(p1, Int(0));
        u64 x = pow_mod(g, j, p1);
        for (u64 i = 0; i < ftilde; ++i) {
            raw[x] += 1;
            x = mul_mod(x, g4, p1);
        }
        eb.sym[j] = CycInt::from_raw(p1, std::move(raw));
        eb.num[j] = eb.sym[j].to_complex();
    }
    eb.branch_plus0 = eb.num[0].imag() > 0;
    eb.branch_plus1 = eb.num[1].imag() > 0;
    return eb;
}

double EtaBasis::closed_form_deviation(i64 A) const {
    double sp = std::sqrt((double)p1);
    double im0 = std::sqrt(2.0) * std::sqrt((double)p1 - (double)A * sp);
    double im1 = std::sqrt(2.0) * std::sqrt((double)p1 + (double)A * sp);
    std::complex<double> e0((-1.0 + sp) / 4.0, (branch_plus0 ? im0 : -im0) / 4.0);
    std::complex<double> e1((-1.0 - sp) / 4.0, (branch_plus1 ? im1 : -im1) / 4.0);
    double dev = 0.0;
    dev = std::max(dev, std::abs(num[0] - e0));
    dev = std::max(dev, std::abs(num[1] - e1));
    dev = std::max(dev, std::abs(num[2] - std::conj(e0)));
    dev = std::max(dev, std::abs(num[3] - std::conj(e1)));
    return dev;
}

namespace {

// Exact recheck of all five relations for one candidate; used both by the
// enumeration and as the post-hoc assertion.
bool check_all_relations(u64 p, u64 p1, const QuarticData& qd, u64 m0res,
                         const u128& target, const std::array<i64, 4>& M, i64 Bsigned) {
    i128 M0 = M[0], M1 = M[1], M2 = M[2], M3 = M[3];
    u128 norm = (u128)(M0 * M0) + (u128)p1 * (u128)(M1 * M1 + M2 * M2 + M3 * M3);
    if (norm != target) return false;
    if (2 * M0 * M2 + 2 * (i128)qd.A * M1 * M3 != (i128)Bsigned * (M1 * M1 - M3 * M3)) return false;
    if (((M[0] + M[1] + M[2] + M[3]) % 4 + 4) % 4 != 0) return false;
    if (((M[1] ^ M[2]) & 1) || ((M[1] ^ M[3]) & 1)) return false;
    i64 r = (i64)(M[0] % (i64)p1);
    if (r < 0) r += (i64)p1;
    if ((u64)r != m0res) return false;
    (void)p;
    return true;
}

void derive_n(MSolution& s) {
    i64 n0 = s.M[0] + s.M[1] + s.M[2] + s.M[3];
    i64 n1 = s.M[0] + s.M[1] - s.M[2] - s.M[3];
    i64 n2 = s.M[0] - s.M[1] + s.M[2] - s.M[3];
    i64 n3 = s.M[0] - s.M[1] - s.M[2] + s.M[3];
    if (n0 % 4 || n1 % 4 || n2 % 4 || n3 % 4)
        throw std::logic_error("M-solution does not transform to integral N");
    s.N = {n0 / 4, n1 / 4, n2 / 4, n3 / 4};
}

constexpr u64 kSquareMask64 = [] {
    u64 mask = 0;
    for (u64 i = 0; i < 64; ++i) mask |= 1ull << ((i * i) & 63);
    return mask;
}();

} // namespace

MSystemResult solve_m_system(u64 p, u64 p1, const QuarticData& qd,
                             unsigned guard_bits, unsigned workers) {
    if (qd.p != p || qd.p1 != p1) throw std::invalid_argument("solve_m_system: mismatched QuarticData");
    if (guard_bits < 5 || guard_bits > 64)
        throw std::invalid_argument("solve_m_system: guard_bits must lie in [5, 64]");
    if (2 * qd.b > qd.ftilde) throw std::logic_error("solve_m_system: b exceeds ftilde/2");
    unsigned long e = (unsigned long)(qd.ftilde - 2 * qd.b);

    MSystemResult res;
    res.magnitude = Int(16) * int_pow(p, e);

    Int guard = Int(1) << guard_bits;
    if (res.magnitude >= guard) {
        res.status = MSystemResult::Status::undecided;
        res.reason = "16*p^(ftilde-2b) = " + to_string(res.magnitude) +
                     " exceeds the magnitude guard 2^" + std::to_string(guard_bits);
        return res;
    }

    const u64 target64 = to_u64(res.magnitude);
    const u128 target = target64;
    const u64 m0res = mul_mod(4, inv_mod(pow_mod(p % p1, qd.b, p1), p1), p1);
    const u64 diskR = target64 / p1;
    const u64 m1max = isqrt_u64(diskR);

    // Enumerates representatives (M1 >= 0; M3 >= 0 when M1 = 0); the other
    // half-plane is recovered through the (M1,M3) -> (-M1,-M3) mirror inside
    // the candidate loop. For a fixed (M1,M3) and B-sign the remaining two
    // coordinates are pinned by
    //   W  := M0^2 + p1*M2^2 = target - p1*(M1^2+M3^2)
    //   G  := 2*M0*M2        = B*(M1^2-M3^2) - 2*A*M1*M3
    // so (M0^2, p1*M2^2) = ((W +- Dr)/2, ...) with Dr^2 = W^2 - p1*G^2.
    // Duplicate emissions collapse in the final sort+dedup.
    auto scan = [&](u64 m1_begin, u64 m1_end, std::vector<MSolution>& out) {
        for (u64 m1 = m1_begin; m1 < m1_end; ++m1) {
            const i64 M1 = (i64)m1;
            const u64 m1sq = m1 * m1;
            const u64 m3max = isqrt_u64(diskR - m1sq);
            for (i64 M3 = (m1 == 0 ? 0 : -(i64)m3max); M3 <= (i64)m3max; ++M3) {
                if ((M1 ^ M3) & 1) continue;
                const u64 m3sq = (u64)(M3 * M3);
                const u64 W = target64 - p1 * (m1sq + m3sq);
                const u128 W2 = (u128)W * W;
                const bool b_term_zero = (M1 * M1 == M3 * M3);
                for (int bsign = 0; bsign < (b_term_zero ? 1 : 2); ++bsign) {
                    const i64 Bs = bsign ? -qd.B : qd.B;
                    const i128 G = (i128)Bs * ((i128)M1 * M1 - (i128)M3 * M3) -
                                   2 * (i128)qd.A * M1 * M3;
                    const u128 absG = G < 0 ? (u128)(-G) : (u128)G;
                    if (absG >> 64) continue;
                    const u128 G2 = absG * absG;
                    if (G2 > W2 / p1) continue;
                    const u128 D2 = W2 - (u128)p1 * G2;
                    if (!((kSquareMask64 >> ((u64)D2 & 63)) & 1)) continue;
                    const u64 Dr = isqrt_u128(D2);
                    if ((u128)Dr * Dr != D2) continue;
                    for (int branch = 0; branch < (Dr == 0 ? 1 : 2); ++branch) {
                        const u128 num = branch ? (u128)W - Dr : (u128)W + Dr;
                        if (num & 1) continue;
                        const u128 m0sq128 = num / 2;
                        if (m0sq128 >> 64) continue;
                        const u64 m0sq = (u64)m0sq128;
                        const u64 rem = W - m0sq;
                        if (rem % p1) continue;
                        u64 m0a, m2a;
                        if (!is_square_u64(m0sq, &m0a)) continue;
                        if (!is_square_u64(rem / p1, &m2a)) continue;
                        for (i64 M0 : {(i64)m0a, -(i64)m0a}) {
                            for (i64 M2 : {(i64)m2a, -(i64)m2a}) {
                                for (int mirror = 0; mirror < 2; ++mirror) {
                                    std::array<i64, 4> cand{M0, mirror ? -M1 : M1, M2, mirror ? -M3 : M3};
                                    for (i64 Btry : {qd.B, -qd.B}) {
                                        if (!check_all_relations(p, p1, qd, m0res, target, cand, Btry)) continue;
                                        MSolution s;
                                        s.M = cand;
                                        s.b_sign = b_term_zero ? MSolution::BSign::both
                                                 : (Btry == qd.B ? MSolution::BSign::plus : MSolution::BSign::minus);
                                        out.push_back(s);
                                        if (b_term_zero) break;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    };

    if (workers == 0) workers = 1;
    std::vector<std::vector<MSolution>> buckets(workers);
    if (workers == 1 || m1max < 64) {
        scan(0, m1max + 1, buckets[0]);
    } else {
        std::vector<std::thread> threads;
        u64 chunk = (m1max + workers) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            u64 b = std::min<u64>(m1max + 1, (u64)w * chunk);
            u64 e2 = std::min<u64>(m1max + 1, b + chunk);
            threads.emplace_back([&, b, e2, w] { scan(b, e2, buckets[w]); });
        }
        for (auto& t : threads) t.join();
    }

    std::vector<MSolution> all;
    for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    for (const auto& s : all) {
        if (!res.solutions.empty() && res.solutions.back().M == s.M) {
            if (res.solutions.back().b_sign != s.b_sign)
                res.solutions.back().b_sign = MSolution::BSign::both;
            continue;
        }
        res.solutions.push_back(s);
    }
    for (auto& s : res.solutions) {
        derive_n(s);
        i64 Bs = s.b_sign == MSolution::BSign::minus ? -qd.B : qd.B;
        if (!check_all_relations(p, p1, qd, m0res, target, s.M, Bs))
            throw std::logic_error("solve_m_system: post-hoc relation check failed");
    }
    if (res.solutions.empty())
        throw std::runtime_error("solve_m_system: no integer solutions; inconsistent input "
                                 "(a Gauss sum always yields at least one)");
    return res;
}

TProfile t_profile(const MSolution& sol, u64 p1) {
    TProfile t;
    i64 t1 = (i64)((1 - (i64)p1) / 4) * sol.M[0];
    t.values[0] = t1;
    for (int i = 0; i < 4; ++i) t.values[i + 1] = t1 + (i64)p1 * sol.N[i];
    auto v = t.values;
    std::sort(v.begin(), v.end());
    t.distinct_count = (unsigned)(std::unique(v.begin(), v.end()) - v.begin());
    if (t.distinct_count < 2)
        throw std::logic_error("t_profile: fewer than two distinct values (impossible for a Gauss sum)");
    return t;
}

Verdict::Family square_family(u64 p1) {
    if (is_square_u64(p1 - 1)) return Verdict::Family::p1_minus_1_square;
    if (p1 > 9 && is_square_u64(p1 - 9)) return Verdict::Family::p1_minus_9_square;
    return Verdict::Family::none;
}

bool ratio_compliant(u64 p1, const MSolution& sol, Verdict::Family family) {
    (void)p1;
    static const std::array<std::array<i64, 4>, 4> fam1{{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}};
    static const std::array<std::array<i64, 4>, 4> fam9{{{3, -1, -1, -1}, {3, -1, 1, 1}, {3, 1, -1, 1}, {3, 1, 1, -1}}};
    const auto* targets = family == Verdict::Family::p1_minus_1_square ? &fam1
                        : family == Verdict::Family::p1_minus_9_square ? &fam9
                        : nullptr;
    if (!targets) return false;
    for (const auto& t : *targets) {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4 && ok; ++j)
                if ((i128)sol.M[i] * t[j] != (i128)sol.M[j] * t[i]) ok = false;
        if (ok) return true;
    }
    return false;
}

Verdict classify_srg(u64 p1, const std::vector<MSolution>& sols) {
    if (sols.empty()) throw std::invalid_argument("classify_srg: empty solution list");
    Verdict v;
    v.family = square_family(p1);
    if (v.family == Verdict::Family::none) {
        v.provenance = "index-4 classification: neither p1-1 nor p1-9 is a perfect square";
        return v;
    }
    v.all_solutions_compliant = true;
    for (const auto& s : sols)
        if (!ratio_compliant(p1, s, v.family)) { v.all_solutions_compliant = false; break; }
    v.is_srg = v.all_solutions_compliant;
    std::string fam = v.family == Verdict::Family::p1_minus_1_square ? "p1-1" : "p1-9";
    v.provenance = "index-4 classification: " + fam + " square family; " +
                   (v.all_solutions_compliant
                        ? std::to_string(sols.size()) + "/" + std::to_string(sols.size()) + " solutions compliant"
                        : "non-compliant solution present");
    return v;
}

SpectrumPrediction predicted_spectrum(u64 p, u64 p1, unsigned m,
                                      const MSolution& sol, const QuarticData& qd) {
    if (m == 0) throw std::invalid_argument("predicted_spectrum: m must be positive");
    Int p1m1 = int_pow(p1, m - 1);              // p1^(m-1)
    Int f = p1m1 * Int((unsigned long)(p1 - 1)) / 4;
    Int ftilde((unsigned long)qd.ftilde);
    Int expo = (f - ftilde) / 2 + Int((unsigned long)qd.b);
    if (!expo.fits_ulong_p()) throw std::invalid_argument("predicted_spectrum: exponent too large");
    Int pE = int_pow(p, expo.get_ui());

    TProfile tp = t_profile(sol, p1);
    Int wT1 = p1m1;
    Int wOther = ftilde * p1m1;

    std::map<Int, Int> acc;
    for (int i = 0; i < 5; ++i) {
        Int val = Int((long)tp.values[i]) * pE - 1;
        val = exact_div(val, Int((unsigned long)p1)); // throws if non-integral
        acc[val] += (i == 0 ? wT1 : wOther);
    }
    SpectrumPrediction out;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) out.values.push_back({it->first, it->second});
    return out;
}

std::string msolutions_to_json(u64 p, u64 p1, unsigned m, const QuarticData& qd,
                               const MSystemResult& ms, const Verdict& verdict,
                               const SpectrumPrediction* spectrum) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["p1"] = p1;
    j["m"] = m;
    j["ftilde"] = qd.ftilde;
    j["b"] = qd.b;
    j["A"] = qd.A;
    j["B"] = qd.B;
    j["magnitude"] = to_string(ms.magnitude);
    if (ms.status == MSystemResult::Status::undecided) {
        j["status"] = "undecided";
        j["reason"] = ms.reason;
    } else {
        j["status"] = "solved";
        auto sols = nlohmann::ordered_json::array();
        for (const auto& s : ms.solutions) sols.push_back(s.M);
        j["solutions"] = sols;
        j["verdict"] = verdict.is_srg ? "srg" : "not-srg";
        j["provenance"] = verdict.provenance;
        if (spectrum) {
            auto sp = nlohmann::ordered_json::array();
            for (const auto& [val, mult] : spectrum->values)
                sp.push_back({to_string(val), to_string(mult)});
            j["predicted_spectrum"] = sp;
        }
    }
    return j.dump();
}

} // namespace cyclosrg
