#include "cyclosrg/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cyclosrg {

Int exact_div(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::invalid_argument("exact_div: zero divisor");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(r) != 0) throw std::runtime_error("exact_div: not divisible");
    return q;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 pow_mod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 m) {
    i64 t = 0, nt = 1;
    i64 r = (i64)m, nr = (i64)(a % m);
    while (nr != 0) {
        i64 q = r / nr;
        t -= q * nt; std::swap(t, nt);
        r -= q * nr; std::swap(r, nr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: argument not invertible");
    return (u64)(t < 0 ? t + (i64)m : t);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % p == 0) return n == p;
    u64 d = n - 1;
    int s = 0;
    while (!(d & 1)) { d >>= 1; ++s; }
    // This witness set is exact for all n < 3.3e24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if (!(n & 1)) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mul_mod(x, x, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<u64> flat;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull})
        while (n % p == 0) { flat.push_back(p); n /= p; }
    factor_rec(n, flat);
    std::sort(flat.begin(), flat.end());
    std::vector<std::pair<u64, int>> out;
    for (u64 p : flat) {
        if (!out.empty() && out.back().first == p) out.back().second++;
        else out.push_back({p, 1});
    }
    return out;
}

std::vector<u64> primes_up_to(u64 n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<u64> out;
    for (u64 i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

u64 euler_phi_from_factors(const std::vector<std::pair<u64, int>>& f) {
    u64 phi = 1;
    for (auto [p, e] : f) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

u64 mult_order(u64 a, u64 n) {
    if (n < 2) throw std::invalid_argument("mult_order: modulus must be >= 2");
    a %= n;
    if (std::gcd(a, n) != 1) throw std::invalid_argument("mult_order: gcd(a, n) != 1");
    auto nf = factorize(n);
    u64 phi = euler_phi_from_factors(nf);
    u64 ord = phi;
    for (auto [p, e] : factorize(phi)) {
        (void)e;
        while (ord % p == 0 && pow_mod(a, ord / p, n) == 1) ord /= p;
    }
    return ord;
}

u64 primitive_root(u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("primitive_root: p must be prime");
    if (p == 2) return 1;
    auto pf = factorize(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [ell, e] : pf) {
            (void)e;
            if (pow_mod(g, (p - 1) / ell, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

u64 primitive_root_lifted(u64 p1, unsigned m) {
    if (!is_prime(p1) || p1 == 2) throw std::invalid_argument("primitive_root_lifted: p1 must be an odd prime");
    if (m == 0) throw std::invalid_argument("primitive_root_lifted: m must be positive");
    auto pf = factorize(p1 - 1);
    u64 p1sq = p1 * p1;
    for (u64 g = 2; g < p1; ++g) {
        bool ok = true;
        for (auto [ell, e] : pf) {
            (void)e;
            if (pow_mod(g, (p1 - 1) / ell, p1) == 1) { ok = false; break; }
        }
        if (!ok) continue;
        if (pow_mod(g, p1 - 1, p1sq) != 1) return g;
    }
    throw std::logic_error("primitive_root_lifted: none found");
}

u64 isqrt_u64(u64 x) { return isqrt_u128(x); }

u64 isqrt_u128(u128 x) {
    if (x == 0) return 0;
    u64 r = (u64)sqrtl((long double)x);
    while (r > 0 && (u128)r * r > x) --r;
    while ((u128)(r + 1) * (r + 1) <= x) ++r;
    return r;
}

bool is_square_u64(u64 x, u64* root) {
    // quick residue rejection before the isqrt
    static const u64 m64 = [] {
        u64 mask = 0;
        for (u64 i = 0; i < 64; ++i) mask |= 1ull << ((i * i) & 63);
        return mask;
    }();
    if (!((m64 >> (x & 63)) & 1)) return false;
    u64 r = isqrt_u64(x);
    if (r * r != x) return false;
    if (root) *root = r;
    return true;
}

bool is_sum_of_three_squares(u64 n) {
    while ((n & 3) == 0 && n) n >>= 2;
    return (n & 7) != 7;
}

} // namespace cyclosrg
