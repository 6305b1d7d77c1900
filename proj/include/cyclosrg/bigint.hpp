#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace cyclosrg {

// All verdict-bearing integer arithmetic is exact. mpz_class carries anything
// that can outgrow 64 bits (q = p^f, family parameters, guard magnitudes).
using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int int_pow(std::uint64_t base, unsigned long exp) {
    Int b;
    mpz_set_ui(b.get_mpz_t(), base);
    return int_pow(b, exp);
}

inline bool is_perfect_square(const Int& x) {
    if (sgn(x) < 0) return false;
    return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& x) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

// Exact division; throws if the division leaves a remainder.
Int exact_div(const Int& num, const Int& den);

inline bool fits_u64(const Int& x) { return sgn(x) >= 0 && x.fits_ulong_p(); }

inline std::uint64_t to_u64(const Int& x) { return mpz_get_ui(x.get_mpz_t()); }

inline std::string to_string(const Int& x) { return x.get_str(); }

} // namespace cyclosrg
