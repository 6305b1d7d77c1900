#include "cyclosrg/pipeline.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace cyclosrg {

int VerifyReport::exit_code() const {
    if (msystem.status == MSystemResult::Status::undecided) return 3;
    if (!verdict || !verdict->is_srg) return 2;
    if (spectrum_ambiguous && !(direct_checked && direct_matches)) return 3;
    if (direct_checked && !direct_matches) return 2;
    if (brute_checked && !brute_matches) return 2;
    return 0;
}

VerifyReport run_verify(u64 p, u64 p1, unsigned m, const Budgets& budgets) {
    if (m == 0) throw std::invalid_argument("run_verify: m must be positive");
    auto diag = index4_check(p, p1);
    if (!diag.ok) throw std::invalid_argument("run_verify: " + diag.reason);

    VerifyReport rep;
    rep.p = p;
    rep.p1 = p1;
    rep.m = m;
    rep.qd = quartic_decomposition(p1, p);
    rep.eta_branch_plus = eta_values(p1, rep.qd.g).branch_plus0;

    Int f = int_pow(p1, m - 1) * Int((unsigned long)(p1 - 1)) / 4;
    if (!f.fits_ulong_p()) throw std::invalid_argument("run_verify: extension degree too large");
    rep.q = int_pow(p, f.get_ui());

    rep.msystem = solve_m_system(p, p1, rep.qd, budgets.guard_bits, budgets.workers);
    if (rep.msystem.status == MSystemResult::Status::undecided) return rep;

    rep.verdict = classify_srg(p1, rep.msystem.solutions);

    // the spectrum prediction is expected to be solution-independent; if the
    // solutions ever disagree the report flags it instead of guessing which
    // one carries the actual Gauss sum (the direct check below can settle it)
    std::vector<SpectrumPrediction> per_solution;
    for (const auto& sol : rep.msystem.solutions)
        per_solution.push_back(predicted_spectrum(p, p1, m, sol, rep.qd));
    rep.spectrum_ambiguous = false;
    for (const auto& sp : per_solution)
        if (sp.values != per_solution.front().values) { rep.spectrum_ambiguous = true; break; }
    if (!rep.spectrum_ambiguous) rep.predicted = per_solution.front();

    if (rep.verdict->is_srg && rep.predicted && rep.predicted->values.size() == 2) {
        Int k = exact_div(rep.q - 1, Int((unsigned long)p1));
        rep.predicted_params = params_from_spectrum(rep.q, k,
                                                    rep.predicted->values[0].first,
                                                    rep.predicted->values[1].first);
    }

    // direct spectral verification when the field is enumerable
    if (rep.q <= budgets.enum_cap) {
        FieldSpec spec = FieldSpec::build(p, (unsigned)f.get_ui(), budgets.enum_cap);
        u64 N = to_u64(int_pow(p1, m));
        TraceHistogram hist = histogram_cached(spec, N, budgets);
        ConnectionSet D = ConnectionSet::index4(p1, m);
        if (!is_symmetric(hist, D))
            throw std::logic_error("run_verify: -1 is not in C_0, connection set is not symmetric");
        rep.direct_checked = true;
        rep.direct_eigen = restricted_eigenvalues(hist, D);
        std::map<Int, Int> direct;
        if (rep.direct_eigen->all_rational)
            for (const auto& [val, mult] : rep.direct_eigen->integer_multiset)
                direct[val] = Int((unsigned long)mult);
        auto matches = [&](const SpectrumPrediction& sp) {
            if (!rep.direct_eigen->all_rational) return false;
            std::map<Int, Int> pred;
            for (const auto& [val, mult] : sp.values) pred[val] = mult;
            return direct == pred;
        };
        if (rep.predicted) {
            rep.direct_matches = matches(*rep.predicted);
        } else {
            // ambiguous prediction: the direct spectrum must match at least
            // one solution (the one representing the actual Gauss sum)
            for (const auto& sp : per_solution)
                if (matches(sp)) { rep.direct_matches = true; break; }
        }

        if (rep.q <= Int((unsigned long)budgets.brute_cap)) {
            rep.brute_checked = true;
            auto graph = build_cayley(spec, D, budgets.brute_cap);
            auto params = brute_force_check(graph);
            if (params) rep.brute_params = *params;
            bool verdict_agrees = params.has_value() == rep.verdict->is_srg;
            bool params_agree = true;
            if (params && rep.predicted_params)
                params_agree = params->same_basic(*rep.predicted_params);
            rep.brute_matches = verdict_agrees && params_agree;
        }
    }
    return rep;
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    os << "pair (p=" << p << ", p1=" << p1 << "), m=" << m << ", q=" << to_string(q) << "\n";
    os << "quartic data: ftilde=" << qd.ftilde << " b=" << qd.b
       << " b_list=(" << qd.b_list[0] << "," << qd.b_list[1] << "," << qd.b_list[2] << "," << qd.b_list[3] << ")"
       << " A=" << qd.A << " B=" << qd.B
       << " eta0 branch: " << (eta_branch_plus ? "+" : "-") << "\n";
    os << "magnitude 16*p^(ftilde-2b) = " << to_string(msystem.magnitude) << "\n";
    if (msystem.status == MSystemResult::Status::undecided) {
        os << "undecided: " << msystem.reason << "\n";
        return os.str();
    }
    os << "solutions (" << msystem.solutions.size() << "):\n";
    for (const auto& s : msystem.solutions) {
        os << "  M=(" << s.M[0] << "," << s.M[1] << "," << s.M[2] << "," << s.M[3] << ")"
           << " N=(" << s.N[0] << "," << s.N[1] << "," << s.N[2] << "," << s.N[3] << ")"
           << " B" << (s.b_sign == MSolution::BSign::both ? "+-" : s.b_sign == MSolution::BSign::plus ? "+" : "-")
           << "\n";
    }
    os << "verdict: " << (verdict->is_srg ? "srg" : "not srg") << " [" << verdict->provenance << "]\n";
    if (spectrum_ambiguous) {
        os << "spectrum: ambiguous - solutions disagree, requires direct verification\n";
        return os.str();
    }
    if (predicted) {
        os << "predicted restricted eigenvalues (value x class multiplicity):";
        for (const auto& [val, mult] : predicted->values)
            os << " " << to_string(val) << " x" << to_string(mult);
        os << "\n";
    }
    if (predicted_params) {
        const auto& pp = *predicted_params;
        os << "predicted srg(" << to_string(pp.v) << ", " << to_string(pp.k) << ", "
           << to_string(pp.lambda) << ", " << to_string(pp.mu) << ")"
           << " r=" << to_string(pp.r) << " s=" << to_string(pp.s)
           << " f1=" << to_string(pp.f1) << " f2=" << to_string(pp.f2) << "\n";
    }
    if (direct_checked) {
        os << "direct spectral check: " << (direct_matches ? "match" : "MISMATCH") << " (";
        for (size_t i = 0; i < direct_eigen->distinct.size(); ++i) {
            if (i) os << ", ";
            os << direct_eigen->distinct[i].first.to_string() << " x" << direct_eigen->distinct[i].second;
        }
        os << ")\n";
    }
    if (brute_checked) {
        os << "adjacency brute force: " << (brute_matches ? "match" : "MISMATCH");
        if (brute_params)
            os << " srg(" << to_string(brute_params->v) << ", " << to_string(brute_params->k) << ", "
               << to_string(brute_params->lambda) << ", " << to_string(brute_params->mu) << ")";
        os << "\n";
    }
    return os.str();
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["p1"] = p1;
    j["m"] = m;
    j["q"] = to_string(q);
    j["ftilde"] = qd.ftilde;
    j["b"] = qd.b;
    j["A"] = qd.A;
    j["B"] = qd.B;
    j["eta0_branch"] = eta_branch_plus ? "+" : "-";
    j["magnitude"] = to_string(msystem.magnitude);
    if (msystem.status == MSystemResult::Status::undecided) {
        j["status"] = "undecided";
        j["reason"] = msystem.reason;
        return j.dump();
    }
    j["status"] = "solved";
    auto sols = nlohmann::ordered_json::array();
    for (const auto& s : msystem.solutions) sols.push_back(s.M);
    j["solutions"] = sols;
    j["verdict"] = verdict->is_srg ? "srg" : "not-srg";
    j["provenance"] = verdict->provenance;
    if (spectrum_ambiguous) {
        j["spectrum"] = "ambiguous";
        return j.dump();
    }
    if (predicted) {
        auto sp = nlohmann::ordered_json::array();
        for (const auto& [val, mult] : predicted->values)
            sp.push_back({to_string(val), to_string(mult)});
        j["predicted_spectrum"] = sp;
    }
    if (predicted_params) j["predicted_params"] = nlohmann::ordered_json::parse(predicted_params->to_json());
    if (direct_checked) {
        j["direct_check"] = direct_matches ? "match" : "mismatch";
        auto de = nlohmann::ordered_json::array();
        for (const auto& [val, mult] : direct_eigen->distinct)
            de.push_back({val.to_string(), mult});
        j["direct_spectrum"] = de;
    }
    if (brute_checked) {
        j["brute_check"] = brute_matches ? "match" : "mismatch";
        if (brute_params) j["brute_params"] = nlohmann::ordered_json::parse(brute_params->to_json());
    }
    return j.dump();
}

} // namespace cyclosrg
