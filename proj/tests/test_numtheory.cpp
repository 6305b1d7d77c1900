#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclosrg/numtheory.hpp"

#include <numeric>

using namespace cyclosrg;

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(37));
    CHECK(is_prime(8837));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(4357ull * 4357));
    CHECK(is_prime(2147483647ull));          // 2^31 - 1
    CHECK_FALSE(is_prime(3215031751ull));    // strong pseudoprime to 2,3,5,7
}

TEST_CASE("factorization round-trips") {
    for (u64 n : {2ull, 12ull, 40353606ull, 999999999999ull, 720720ull}) {
        u64 prod = 1;
        for (auto [p, e] : factorize(n)) {
            CHECK(is_prime(p));
            for (int i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("mult_order reference values") {
    CHECK(mult_order(7, 37) == 9);   // = phi(37)/4
    CHECK(mult_order(3, 13) == 3);   // = phi(13)/4
    CHECK(mult_order(2, 5) == 4);    // cycle 2,4,3,1
    CHECK(mult_order(2, 13) == 12);
    CHECK(mult_order(19, 101) == 25);
    CHECK_THROWS(mult_order(6, 12));
}

TEST_CASE("mult_order against brute cycle") {
    for (u64 n : {9ull, 13ull, 169ull, 37ull, 125ull}) {
        for (u64 a = 2; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            u64 o = 1, x = a % n;
            while (x != 1) { x = mul_mod(x, a, n); ++o; }
            CHECK(mult_order(a, n) == o);
        }
    }
}

TEST_CASE("primitive roots") {
    CHECK(primitive_root(5) == 2);
    CHECK(primitive_root(13) == 2);
    CHECK(primitive_root(37) == 2);
    CHECK(primitive_root(101) == 2);
    CHECK(primitive_root(7) == 3);
}

TEST_CASE("primitive_root_lifted") {
    // 2^12 = 4096 = 40 (mod 169), so 2 lifts
    CHECK(primitive_root_lifted(13, 1) == 2);
    CHECK(pow_mod(2, 12, 169) == 40);
    // 2^18 = -1 (mod 37) so ord_37(2) = 36; the lift criterion holds mod 37^2
    CHECK(primitive_root_lifted(37, 1) == 2);
    CHECK(pow_mod(2, 18, 37) == 36);
    CHECK(primitive_root_lifted(5, 3) == 2);
    // the result is independent of m
    CHECK(primitive_root_lifted(13, 4) == primitive_root_lifted(13, 1));
}

TEST_CASE("inverse and pow") {
    for (u64 m : {13ull, 37ull, 101ull, 169ull}) {
        for (u64 a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            CHECK(mul_mod(a, inv_mod(a, m), m) == 1);
        }
    }
    CHECK(pow_mod(7, 9, 37) == 1);
    CHECK(pow_mod(3, 3, 13) == 1);
}

TEST_CASE("integer square helpers") {
    u64 r = 0;
    CHECK(is_square_u64(0, &r));
    CHECK(is_square_u64(36, &r));
    CHECK(r == 6);
    CHECK_FALSE(is_square_u64(35));
    CHECK_FALSE(is_square_u64(37));
    CHECK(isqrt_u64(48) == 6);
    CHECK(isqrt_u128((u128)1 << 100) == (u64)1 << 50);
    // 28 = 4 * 7 is not a sum of three squares; 35 = 25+9+1 is
    CHECK_FALSE(is_sum_of_three_squares(28));
    CHECK(is_sum_of_three_squares(35));
    CHECK_FALSE(is_sum_of_three_squares(7));
}

TEST_CASE("bigint helpers") {
    CHECK(int_pow((u64)7, 9) == Int(40353607));
    CHECK(to_string(int_pow((u64)3, 39)) == "4052555153018976267");
    CHECK(is_perfect_square(Int(36)));
    CHECK_FALSE(is_perfect_square(Int(35)));
    CHECK(exact_div(Int(48), Int(16)) == 3);
    CHECK_THROWS(exact_div(Int(48), Int(13)));
}
