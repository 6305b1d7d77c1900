#pragma once

#include "cyclosrg/bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclosrg {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;
using i128 = __int128;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 e, u64 m);
u64 inv_mod(u64 a, u64 m); // m need not be prime; requires gcd(a,m)=1

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

// Prime factorization by trial division plus Pollard rho.
// Returns (prime, exponent) pairs sorted by prime.
std::vector<std::pair<u64, int>> factorize(u64 n);

std::vector<u64> primes_up_to(u64 n);

u64 euler_phi_from_factors(const std::vector<std::pair<u64, int>>& f);

// Exact multiplicative order of a modulo n; requires gcd(a, n) = 1.
u64 mult_order(u64 a, u64 n);

// Least primitive root modulo an odd prime p.
u64 primitive_root(u64 p);

// Least g that is a primitive root mod p1 with g^(p1-1) != 1 (mod p1^2),
// hence a primitive root mod p1^m for every m >= 1. The m argument is
// validated but does not change the result.
u64 primitive_root_lifted(u64 p1, unsigned m);

u64 isqrt_u64(u64 x);
u64 isqrt_u128(u128 x);
bool is_square_u64(u64 x, u64* root = nullptr);

// Legendre three-square theorem: representable iff not of form 4^a(8b+7).
bool is_sum_of_three_squares(u64 n);

} // namespace cyclosrg
