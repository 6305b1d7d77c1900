#include "cyclosrg/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <thread>

using namespace cyclosrg;

namespace {

struct RunConfig {
    std::string format = "text"; // text | json | csv
    Budgets budgets;
};

// The eleven sporadic cyclotomic srg instances (N, p, f, index of <p> in
// Z_N*) that fall outside the subfield and semi-primitive families; kept as
// reference data for the table1 subcommand.
struct SporadicRow { u64 N, p, f, index; };
constexpr SporadicRow kSporadic[] = {
    {11, 3, 5, 2},   {19, 5, 9, 2},    {35, 3, 12, 2},  {37, 7, 9, 4},
    {43, 11, 7, 6},  {67, 17, 33, 2},  {107, 3, 53, 2}, {133, 5, 18, 6},
    {163, 41, 81, 2}, {323, 3, 144, 2}, {499, 5, 249, 2},
};

int cmd_field_info(u64 p, unsigned f, const RunConfig& cfg) {
    FieldSpec spec = FieldSpec::build(p, f, cfg.budgets.enum_cap);
    if (cfg.format == "json") {
        std::cout << spec.to_json() << "\n";
        return 0;
    }
    std::cout << "F_" << p << "^" << f << ", q = " << to_string(spec.q()) << "\n";
    std::cout << "modulus coefficients (low degree first):";
    for (auto c : spec.modulus()) std::cout << " " << c;
    std::cout << "\nprimitive element gamma:";
    for (auto c : spec.gamma().c) std::cout << " " << c;
    std::cout << "\nq-1 =";
    bool first = true;
    for (auto [ell, e] : spec.q1_factors()) {
        std::cout << (first ? " " : " * ") << ell;
        if (e > 1) std::cout << "^" << e;
        first = false;
    }
    std::cout << "\n";
    return 0;
}

int cmd_periods(u64 p, unsigned f, u64 N, const RunConfig& cfg) {
    FieldSpec spec = FieldSpec::build(p, f, cfg.budgets.enum_cap);
    TraceHistogram hist = histogram_cached(spec, N, cfg.budgets);
    auto periods = gauss_periods(hist);
    if (cfg.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(hist.to_json());
        auto arr = nlohmann::ordered_json::array();
        for (const auto& t : periods) arr.push_back(t.to_string());
        j["periods"] = arr;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "Gauss periods of F_" << p << "^" << f << " at N = " << N << ":\n";
    for (u64 a = 0; a < N; ++a)
        std::cout << "  tau_" << a << " = " << periods[a].to_string() << "\n";
    return 0;
}

int cmd_verify(u64 p, u64 p1, unsigned m, const RunConfig& cfg) {
    VerifyReport rep = run_verify(p, p1, m, cfg.budgets);
    std::cout << (cfg.format == "json" ? rep.to_json() : rep.to_text());
    if (cfg.format != "json") std::cout << std::flush;
    else std::cout << "\n";
    return rep.exit_code();
}

int cmd_brute(u64 q, u64 N, const std::string& dspec, const RunConfig& cfg) {
    // q must be a prime power p^f
    u64 p = 0;
    unsigned f = 0;
    for (u64 cand = 2; cand * cand <= q; ++cand) {
        if (q % cand) continue;
        u64 t = q;
        unsigned e = 0;
        while (t % cand == 0) { t /= cand; ++e; }
        if (t != 1) throw std::invalid_argument("q is not a prime power");
        p = cand;
        f = e;
        break;
    }
    if (!p) { p = q; f = 1; }
    if (!is_prime(p)) throw std::invalid_argument("q is not a prime power");

    FieldSpec spec = FieldSpec::build(p, f, cfg.budgets.enum_cap);
    // D-spec: comma-separated class indices forming an initial segment,
    // e.g. "0" or "0,1,2"
    std::vector<u64> idx;
    std::stringstream ss(dspec);
    std::string tok;
    while (std::getline(ss, tok, ',')) idx.push_back(std::stoull(tok));
    std::sort(idx.begin(), idx.end());
    for (u64 i = 0; i < idx.size(); ++i)
        if (idx[i] != i) throw std::invalid_argument("D-spec must be the initial segment 0,1,...,t-1");
    ConnectionSet D = ConnectionSet::initial_segment(N, idx.size());

    auto graph = build_cayley(spec, D, cfg.budgets.brute_cap);
    auto params = brute_force_check(graph);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["q"] = q;
        j["N"] = N;
        j["prefix"] = D.prefix;
        j["is_srg"] = params.has_value();
        if (params) j["params"] = nlohmann::ordered_json::parse(params->to_json());
        std::cout << j.dump() << "\n";
    } else {
        if (params)
            std::cout << "srg(" << to_string(params->v) << ", " << to_string(params->k) << ", "
                      << to_string(params->lambda) << ", " << to_string(params->mu) << ")\n";
        else
            std::cout << "not strongly regular\n";
    }
    return params ? 0 : 2;
}

int cmd_solve_m(u64 p, u64 p1, const RunConfig& cfg) {
    auto qd = quartic_decomposition(p1, p);
    auto ms = solve_m_system(p, p1, qd, cfg.budgets.guard_bits, cfg.budgets.workers);
    std::optional<Verdict> verdict;
    if (ms.status == MSystemResult::Status::solved) verdict = classify_srg(p1, ms.solutions);
    if (cfg.format == "json") {
        std::cout << msolutions_to_json(p, p1, 1, qd, ms, verdict.value_or(Verdict{}), nullptr) << "\n";
    } else {
        std::cout << "16*" << p << "^" << (qd.ftilde - 2 * qd.b) << " = " << to_string(ms.magnitude)
                  << ", A = " << qd.A << ", B = " << qd.B << ", b = " << qd.b << "\n";
        if (ms.status == MSystemResult::Status::undecided) {
            std::cout << "undecided: " << ms.reason << "\n";
        } else {
            std::cout << ms.solutions.size() << " solutions:\n";
            for (const auto& s : ms.solutions)
                std::cout << "  (" << s.M[0] << ", " << s.M[1] << ", " << s.M[2] << ", " << s.M[3] << ")\n";
            std::cout << "verdict: " << (verdict->is_srg ? "srg" : "not srg")
                      << " [" << verdict->provenance << "]\n";
        }
    }
    if (ms.status == MSystemResult::Status::undecided) return 3;
    return verdict->is_srg ? 0 : 2;
}

int cmd_search(u64 p_max, u64 p1_max, const RunConfig& cfg) {
    SearchOptions opt;
    opt.guard_bits = cfg.budgets.guard_bits;
    opt.workers = cfg.budgets.workers;
    auto rep = search_pairs(p_max, p1_max, opt);
    if (cfg.format == "json") std::cout << rep.to_json() << "\n";
    else if (cfg.format == "csv") std::cout << rep.to_csv();
    else {
        std::cout << "search p < " << p_max << ", p1 < " << p1_max << "\n";
        std::cout << "hits (" << rep.hits.size() << "):\n";
        for (const auto& h : rep.hits)
            std::cout << "  (p=" << h.p << ", p1=" << h.p1 << ") srg with r=" << to_string(h.predicted.r)
                      << ", s=" << to_string(h.predicted.s) << " at m=1 [" << h.verdict.provenance << "]\n";
        std::cout << "undecided (" << rep.undecided.size() << "):\n";
        for (const auto& u : rep.undecided)
            std::cout << "  (p=" << u.p << ", p1=" << u.p1 << "): " << u.reason << "\n";
        std::cout << "rejected index-4 pairs: " << rep.rejected.size() << "\n";
        std::cout << "counters: p1_candidates=" << rep.counters.p1_candidates
                  << " p1_square_pass=" << rep.counters.p1_square_pass
                  << " pairs_order_checked=" << rep.counters.pairs_order_checked
                  << " pairs_index4=" << rep.counters.pairs_index4
                  << " pairs_shape_feasible=" << rep.counters.pairs_shape_feasible
                  << " pairs_enumerated=" << rep.counters.pairs_enumerated << "\n";
    }
    return 0;
}

int cmd_families(const std::string& pair, unsigned m, const RunConfig& cfg) {
    FamilyPair fp;
    if (pair == "7,37") fp = FamilyPair::p7_p1_37;
    else if (pair == "3,13") fp = FamilyPair::p3_p1_13;
    else throw std::invalid_argument("pair must be 7,37 or 3,13");
    SrgParams params = family_params(fp, m);
    if (cfg.format == "json") std::cout << params.to_json() << "\n";
    else
        std::cout << "srg(" << to_string(params.v) << ", " << to_string(params.k) << ", "
                  << to_string(params.lambda) << ", " << to_string(params.mu) << ") r="
                  << to_string(params.r) << " s=" << to_string(params.s) << " f1="
                  << to_string(params.f1) << " f2=" << to_string(params.f2) << "\n";
    return 0;
}

int cmd_table1(const RunConfig& cfg) {
    if (cfg.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : kSporadic)
            arr.push_back({{"N", r.N}, {"p", r.p}, {"f", r.f}, {"index", r.index}});
        std::cout << arr.dump() << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "N,p,f,index\n";
        for (const auto& r : kSporadic)
            std::cout << r.N << "," << r.p << "," << r.f << "," << r.index << "\n";
    } else {
        std::cout << "the eleven sporadic cyclotomic srg instances (N, p, f, [Z_N*:<p>]):\n";
        for (const auto& r : kSporadic)
            std::cout << "  N=" << r.N << " p=" << r.p << " f=" << r.f << " index=" << r.index << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclosrg: strongly regular Cayley graphs on finite fields from unions of "
                 "cyclotomic classes, with exact Gauss-period spectra and index-4 Gauss-sum "
                 "classification"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.budgets.workers = std::max(1u, std::thread::hardware_concurrency());
    std::string enum_budget_str = to_string(cfg.budgets.enum_cap);

    app.add_option("--budget-enum", enum_budget_str, "max field size for full enumerations")
        ->envname("CYCLOSRG_BUDGET_ENUM");
    app.add_option("--budget-brute", cfg.budgets.brute_cap, "max vertices for adjacency brute force")
        ->envname("CYCLOSRG_BUDGET_BRUTE");
    app.add_option("--guard-bits", cfg.budgets.guard_bits,
                   "magnitude guard: 16*p^(ftilde-2b) must stay below 2^bits (5..64)")
        ->envname("CYCLOSRG_GUARD_BITS");
    app.add_option("--cache-dir", cfg.budgets.cache_dir, "histogram cache directory (empty disables)")
        ->envname("CYCLOSRG_CACHE_DIR");
    app.add_option("--format", cfg.format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("CYCLOSRG_FORMAT");
    app.add_option("--workers", cfg.budgets.workers, "worker threads for enumerations")
        ->envname("CYCLOSRG_WORKERS");

    u64 p = 0, p1 = 0, N = 0, q = 0, p_max = 0, p1_max = 0;
    unsigned f = 0, m = 1;
    std::string dspec, pair;

    auto* c_field = app.add_subcommand("field-info", "canonical model of F_{p^f}");
    c_field->add_option("p", p, "characteristic")->required();
    c_field->add_option("f", f, "extension degree")->required();

    auto* c_periods = app.add_subcommand("periods", "exact Gauss periods of F_{p^f} at index N");
    c_periods->add_option("p", p)->required();
    c_periods->add_option("f", f)->required();
    c_periods->add_option("N", N)->required();

    auto* c_verify = app.add_subcommand("verify", "full pipeline for the pair (p, p1) at level m");
    c_verify->add_option("p", p)->required();
    c_verify->add_option("p1", p1)->required();
    c_verify->add_option("m", m)->required();

    auto* c_brute = app.add_subcommand("brute", "adjacency brute-force srg check of Cay(F_q, D)");
    c_brute->add_option("q", q)->required();
    c_brute->add_option("N", N)->required();
    c_brute->add_option("D", dspec, "initial-segment class indices, e.g. 0,1,2")->required();

    auto* c_solve = app.add_subcommand("solve-m", "enumerate the Diophantine M-system for (p, p1)");
    c_solve->add_option("p", p)->required();
    c_solve->add_option("p1", p1)->required();

    auto* c_search = app.add_subcommand("search", "prime-pair search");
    c_search->add_option("p_max", p_max)->required();
    c_search->add_option("p1_max", p1_max)->required();

    auto* c_fam = app.add_subcommand("families", "parameter families at level m");
    c_fam->add_option("pair", pair, "7,37 or 3,13")->required();
    c_fam->add_option("m", m)->required();

    auto* c_table = app.add_subcommand("table1", "the eleven sporadic cyclotomic srg instances");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.budgets.enum_cap = Int(enum_budget_str);
        if (c_field->parsed()) return cmd_field_info(p, f, cfg);
        if (c_periods->parsed()) return cmd_periods(p, f, N, cfg);
        if (c_verify->parsed()) return cmd_verify(p, p1, m, cfg);
        if (c_brute->parsed()) return cmd_brute(q, N, dspec, cfg);
        if (c_solve->parsed()) return cmd_solve_m(p, p1, cfg);
        if (c_search->parsed()) return cmd_search(p_max, p1_max, cfg);
        if (c_fam->parsed()) return cmd_families(pair, m, cfg);
        if (c_table->parsed()) return cmd_table1(cfg);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
