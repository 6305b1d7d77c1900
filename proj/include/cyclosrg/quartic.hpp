#pragma once

#include "cyclosrg/bigint.hpp"
#include "cyclosrg/cycint.hpp"
#include "cyclosrg/numtheory.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace cyclosrg {

/// Arithmetic invariants of an index-4 pair (p, p1): the four quartic
/// residue classes g^j<p> of Z_{p1}*, the class sums b_j, and the unique
/// two-squares decomposition p1 = A^2 + B^2 with A = 3 (mod 4), B > 0.
struct QuarticData {
    u64 p1 = 0;
    u64 p = 0;
    u64 g = 0;              // primitive root mod p1, lift-valid for p1^m
    u64 ftilde = 0;         // (p1 - 1)/4, the order of <p> in Z_{p1}*
    std::array<std::vector<u64>, 4> classes; // sorted residues of g^j<p>
    std::array<u64, 4> b_list{};             // b_j = (sum of class j)/p1
    u64 b = 0;              // min b_j
    u64 c = 0;              // min{b_{l+1}-b, b_{l+3}-b}, recorded only
    unsigned lambda_index = 0; // j attaining b
    i64 A = 0;              // A = 3 (mod 4)
    i64 B = 0;              // B > 0
    // class index of a residue, or -1 (only residues 1..p1-1 are classed)
    std::vector<int> class_of;
};

/// Checks the index-4 preconditions and reports the first violated one.
struct Index4Diagnosis {
    bool ok = false;
    std::string reason; // empty when ok
};
Index4Diagnosis index4_diagnose(u64 p, u64 p1);

QuarticData quartic_decomposition(u64 p1, u64 p);

/// The four quartic Gauss periods eta_j = sum over g^j<p> of zeta_{p1}^a,
/// exact in Z[zeta_{p1}], with numeric values for the closed-form
/// cross-check only. eta_2 = conj(eta_0) and eta_3 = conj(eta_1); whether
/// eta_0 takes the positive imaginary branch depends on the instance and
/// is recorded in branch_plus.
struct EtaBasis {
    u64 p1 = 0;
    u64 g = 0;
    std::array<CycInt, 4> sym;
    std::array<std::complex<double>, 4> num;
    bool branch_plus0 = false; // Im(eta_0) > 0
    bool branch_plus1 = false; // Im(eta_1) > 0

    // Max deviation of the numeric etas from the closed forms
    //   4*eta_0 = (-1+sqrt(p1)) +- i*sqrt(2)*sqrt(p1 - A*sqrt(p1))
    //   4*eta_1 = (-1-sqrt(p1)) +- i*sqrt(2)*sqrt(p1 + A*sqrt(p1))
    // after resolving the branch signs.
    double closed_form_deviation(i64 A) const;
};
EtaBasis eta_values(u64 p1, u64 g);

/// One integer solution of the five-relation system
///   16 p^(ftilde-2b) = M0^2 + p1 (M1^2 + M2^2 + M3^2)
///   2 M0 M2 + 2 A M1 M3 = B (M1^2 - M3^2)
///   M0+M1+M2+M3 = 0 (mod 4)
///   M1 = M2 = M3 (mod 2)
///   M0 = 4 p^(-b) (mod p1)
/// together with the inverse-transformed N coordinates.
struct MSolution {
    std::array<i64, 4> M{};
    std::array<i64, 4> N{};
    enum class BSign { plus, minus, both } b_sign = BSign::both;

    bool operator==(const MSolution& o) const { return M == o.M; }
    bool operator<(const MSolution& o) const { return M < o.M; }
};

struct MSystemResult {
    enum class Status { solved, undecided } status = Status::solved;
    std::string reason;          // set when undecided
    Int magnitude;               // 16 p^(ftilde - 2b)
    std::vector<MSolution> solutions; // lexicographically sorted
};

/// Enumerates every integer solution for both signs of B, under the
/// magnitude guard 16 p^(ftilde-2b) < 2^guard_bits. Exceeding the guard
/// yields an explicit undecided result, never a silent truncation.
/// Throws if the system is solved yet has no solutions (a Gauss sum
/// always provides one).
MSystemResult solve_m_system(u64 p, u64 p1, const QuarticData& qd,
                             unsigned guard_bits = 64, unsigned workers = 1);

/// The five-value profile {T_1..T_5} of a solution:
/// T_1 = (1-p1)/4*M0, T_{i+2} = T_1 + p1*N_i.
struct TProfile {
    std::array<i64, 5> values{};
    unsigned distinct_count = 0;
};
TProfile t_profile(const MSolution& sol, u64 p1);

/// Classification: strongly regular iff the square condition holds and
/// every solution's ratio (M0:M1:M2:M3) lies in the compliant family
/// (projective comparison over signs).
struct Verdict {
    bool is_srg = false;
    enum class Family { none, p1_minus_1_square, p1_minus_9_square } family = Family::none;
    bool all_solutions_compliant = false;
    std::string provenance; // which classification route produced this
};
Verdict classify_srg(u64 p1, const std::vector<MSolution>& sols);

bool ratio_compliant(u64 p1, const MSolution& sol, Verdict::Family family);
Verdict::Family square_family(u64 p1);

/// Exact restricted-eigenvalue prediction for Cay(F_{p^f}, D) at
/// N = p1^m, f = phi(p1^m)/4, from one solution:
/// value(T) = (-1 + p^((f-ftilde)/2 + b) * T)/p1 with class weight
/// p1^(m-1) for the T_1 case and ftilde*p1^(m-1) for each of T_2..T_5.
struct SpectrumPrediction {
    std::vector<std::pair<Int, Int>> values; // (eigenvalue, class multiplicity), sorted
    size_t distinct_count() const { return values.size(); }
};
SpectrumPrediction predicted_spectrum(u64 p, u64 p1, unsigned m,
                                      const MSolution& sol, const QuarticData& qd);

std::string msolutions_to_json(u64 p, u64 p1, unsigned m, const QuarticData& qd,
                               const MSystemResult& ms, const Verdict& verdict,
                               const SpectrumPrediction* spectrum);

} // namespace cyclosrg
