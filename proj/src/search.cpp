#include "cyclosrg/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclosrg {

Index4Diagnosis index4_check(u64 p, u64 p1) { return index4_diagnose(p, p1); }

bool order_lift_check(u64 p, u64 p1) {
    u64 ord = mult_order(p % p1, p1);
    return pow_mod(p % p1, ord, p1 * p1) != 1;
}

bool compliant_shape_feasible(u64 p, const QuarticData& qd) {
    auto family = square_family(qd.p1);
    if (family == Verdict::Family::none) return false;
    u64 cf = family == Verdict::Family::p1_minus_1_square ? 1 : 9;
    unsigned long e = (unsigned long)(qd.ftilde - 2 * qd.b);
    Int target = Int(16) * int_pow(p, e);
    Int denom((unsigned long)(3 * qd.p1 + cf));
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), target.get_mpz_t(), denom.get_mpz_t());
    if (sgn(r) != 0) return false;
    return is_perfect_square(q);
}

namespace {

SrgParams predict_m1_params(u64 p, u64 p1, const QuarticData& qd, const MSolution& sol) {
    auto spec = predicted_spectrum(p, p1, 1, sol, qd);
    if (spec.values.size() != 2)
        throw std::logic_error("predicted spectrum of an srg hit must have two values");
    unsigned long f = qd.ftilde; // m = 1
    Int v = int_pow(p, f);
    Int k = exact_div(v - 1, Int((unsigned long)p1));
    return params_from_spectrum(v, k, spec.values[0].first, spec.values[1].first);
}

} // namespace

SearchReport search_pairs(u64 p_max, u64 p1_max, const SearchOptions& opt) {
    if (p_max < 2 || p1_max < 3) throw std::invalid_argument("search_pairs: ranges too small");
    SearchReport rep;
    rep.p_max = p_max;
    rep.p1_max = p1_max;

    auto primes = primes_up_to(std::max(p_max, p1_max));
    std::vector<u64> p_list;
    for (u64 q : primes)
        if (q < p_max) p_list.push_back(q);

    for (u64 p1 : primes) {
        if (p1 >= p1_max) break;
        if (p1 % 8 != 5 || p1 <= 5) continue;
        rep.counters.p1_candidates++;
        bool square_ok = square_family(p1) != Verdict::Family::none;
        if (!square_ok && !opt.audit_stage1) continue;
        if (square_ok) rep.counters.p1_square_pass++;

        u64 ftilde = (p1 - 1) / 4;
        std::optional<QuarticData> qd; // shared by every p for this p1

        for (u64 p : p_list) {
            if (p == p1) continue;
            if (p % p1 == 0 || (p - 1) % p1 == 0) continue;
            rep.counters.pairs_order_checked++;
            if (mult_order(p % p1, p1) != ftilde) continue;
            if (!order_lift_check(p, p1)) continue;
            rep.counters.pairs_index4++;

            if (!qd) qd = quartic_decomposition(p1, p);
            else { qd->p = p; } // b_j, A, B depend on p1 alone; <p> is the
                                // unique index-4 subgroup, identical for all p
            QuarticData local = *qd;
            local.p = p;

            if (!square_ok) {
                // audit mode: the square condition failed, so the verdict
                // must come out negative no matter what the solutions are
                auto ms = solve_m_system(p, p1, local, opt.guard_bits, opt.workers);
                if (ms.status == MSystemResult::Status::solved) {
                    auto verdict = classify_srg(p1, ms.solutions);
                    if (verdict.is_srg)
                        throw std::logic_error("audit: square-condition reject classified as srg");
                }
                rep.rejected.push_back({p, p1, "square condition fails (audited)"});
                continue;
            }

            if (!compliant_shape_feasible(p, local)) {
                rep.rejected.push_back({p, p1, "no compliant-ratio solution can exist"});
                continue;
            }
            rep.counters.pairs_shape_feasible++;

            auto ms = solve_m_system(p, p1, local, opt.guard_bits, opt.workers);
            if (ms.status == MSystemResult::Status::undecided) {
                rep.undecided.push_back({p, p1, ms.reason});
                continue;
            }
            rep.counters.pairs_enumerated++;
            auto verdict = classify_srg(p1, ms.solutions);
            if (!verdict.is_srg) {
                rep.rejected.push_back({p, p1, verdict.provenance});
                continue;
            }
            SearchHit hit;
            hit.p = p;
            hit.p1 = p1;
            hit.qd = local;
            hit.solutions = ms.solutions;
            hit.verdict = verdict;
            hit.predicted = predict_m1_params(p, p1, local, ms.solutions.front());
            rep.hits.push_back(std::move(hit));
        }
    }

    auto by_pair = [](u64 a_p, u64 a_p1, u64 b_p, u64 b_p1) {
        return a_p1 != b_p1 ? a_p1 < b_p1 : a_p < b_p;
    };
    std::sort(rep.hits.begin(), rep.hits.end(),
              [&](const SearchHit& a, const SearchHit& b) { return by_pair(a.p, a.p1, b.p, b.p1); });
    std::sort(rep.undecided.begin(), rep.undecided.end(),
              [&](const UndecidedPair& a, const UndecidedPair& b) { return by_pair(a.p, a.p1, b.p, b.p1); });
    std::sort(rep.rejected.begin(), rep.rejected.end(),
              [&](const RejectedPair& a, const RejectedPair& b) { return by_pair(a.p, a.p1, b.p, b.p1); });
    return rep;
}

std::string SearchReport::to_csv() const {
    std::ostringstream os;
    os << "p,p1,ftilde,b,A,B,n_solutions,verdict,r,s,status\n";
    for (const auto& h : hits) {
        os << h.p << "," << h.p1 << "," << h.qd.ftilde << "," << h.qd.b << ","
           << h.qd.A << "," << h.qd.B << "," << h.solutions.size() << ",srg,"
           << to_string(h.predicted.r) << "," << to_string(h.predicted.s) << ",hit\n";
    }
    for (const auto& u : undecided)
        os << u.p << "," << u.p1 << ",,,,,,undecided,,,undecided\n";
    for (const auto& r : rejected)
        os << r.p << "," << r.p1 << ",,,,,,not-srg,,,rejected\n";
    return os.str();
}

std::string SearchReport::to_json() const {
    nlohmann::ordered_json j;
    j["p_max"] = p_max;
    j["p1_max"] = p1_max;
    auto hits_j = nlohmann::ordered_json::array();
    for (const auto& h : hits) {
        nlohmann::ordered_json hj;
        hj["p"] = h.p;
        hj["p1"] = h.p1;
        hj["ftilde"] = h.qd.ftilde;
        hj["b"] = h.qd.b;
        hj["A"] = h.qd.A;
        hj["B"] = h.qd.B;
        auto sols = nlohmann::ordered_json::array();
        for (const auto& s : h.solutions) sols.push_back(s.M);
        hj["solutions"] = sols;
        hj["provenance"] = h.verdict.provenance;
        hj["predicted_m1"] = nlohmann::ordered_json::parse(h.predicted.to_json());
        hits_j.push_back(hj);
    }
    j["hits"] = hits_j;
    auto und = nlohmann::ordered_json::array();
    for (const auto& u : undecided) und.push_back({{"p", u.p}, {"p1", u.p1}, {"reason", u.reason}});
    j["undecided"] = und;
    auto rej = nlohmann::ordered_json::array();
    for (const auto& r : rejected) rej.push_back({{"p", r.p}, {"p1", r.p1}, {"reason", r.reason}});
    j["rejected"] = rej;
    j["counters"] = {
        {"p1_candidates", counters.p1_candidates},
        {"p1_square_pass", counters.p1_square_pass},
        {"pairs_order_checked", counters.pairs_order_checked},
        {"pairs_index4", counters.pairs_index4},
        {"pairs_shape_feasible", counters.pairs_shape_feasible},
        {"pairs_enumerated", counters.pairs_enumerated},
    };
    return j.dump();
}

} // namespace cyclosrg
