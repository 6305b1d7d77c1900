#pragma once

#include "cyclosrg/bigint.hpp"
#include "cyclosrg/numtheory.hpp"

#include <complex>
#include <string>
#include <vector>

namespace cyclosrg {

/// Exact element of Z[zeta_n], n prime, in the canonical basis
/// 1, zeta, ..., zeta^(n-2) after substituting
/// zeta^(n-1) = -(1 + zeta + ... + zeta^(n-2)).
/// The representation is unique, so equality is coefficient equality.
class CycInt {
public:
    CycInt() : n_(0) {}
    explicit CycInt(u64 n);                       // zero of Z[zeta_n]
    CycInt(u64 n, const Int& rational);           // rational integer embedding

    // Reduces a raw coefficient vector of length <= n over exponents
    // 0..n-1 to canonical form. Throws if n is not prime.
    static CycInt from_raw(u64 n, std::vector<Int> raw);

    static CycInt zeta_power(u64 n, u64 k);       // zeta_n^k

    u64 order() const { return n_; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational_integer() const;
    Int as_integer() const;                       // throws if not rational

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator*(const Int& k) const;
    CycInt& operator+=(const CycInt& o) { return *this = *this + o; }

    bool operator==(const CycInt& o) const = default;
    // Order on coefficient vectors; only used for canonical sorting.
    bool operator<(const CycInt& o) const;

    // Galois action zeta -> zeta^t, gcd(t, n) = 1. Exact.
    CycInt galois(u64 t) const;
    CycInt conjugate() const { return galois(n_ - 1); }

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    u64 n_;
    std::vector<Int> c_; // length n-1
    void check_compatible(const CycInt& o) const;
};

} // namespace cyclosrg
