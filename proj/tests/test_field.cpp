#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclosrg/field.hpp"

#include <map>
#include <set>

using namespace cyclosrg;

TEST_CASE("build F_2") {
    auto spec = FieldSpec::build(2, 1);
    CHECK(spec.q() == 2);
    CHECK(spec.gamma() == spec.one());
    CHECK(spec.pow(spec.gamma(), spec.q() - 1) == spec.one());
}

TEST_CASE("build F_9: modulus x^2+1 and gamma 1+x") {
    auto spec = FieldSpec::build(3, 2);
    // x^2 + 1: -1 is a non-square mod 3, verified by the exhaustive root test
    CHECK(spec.modulus() == std::vector<std::uint32_t>{1, 0, 1});
    for (u64 r = 0; r < 3; ++r) CHECK((r * r + 1) % 3 != 0);
    CHECK(spec.gamma().c == std::vector<std::uint32_t>{1, 1});
    // (1+x)^4 = 2, so 1+x has order 8
    auto g4 = spec.pow(spec.gamma(), Int(4));
    CHECK(g4 == spec.from_scalar(2));
    CHECK(spec.element_order(spec.gamma()) == 8);
}

TEST_CASE("build F_7^9 exactly") {
    auto spec = FieldSpec::build(7, 9);
    CHECK(spec.q() == Int(40353607));
    CHECK(spec.pow(spec.gamma(), spec.q() - 1) == spec.one());
}

TEST_CASE("build_field rejects bad input") {
    CHECK_THROWS_AS(FieldSpec::build(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::build(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::build(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::build(2, 40), BudgetError);
}

TEST_CASE("element arithmetic in F_9") {
    auto spec = FieldSpec::build(3, 2);
    FieldElement onex{{1, 1}}; // 1 + x
    // (1+x)^2 = 2x after reduction by x^2+1
    CHECK(spec.mul(onex, onex) == FieldElement{{0, 2}});
    // a * a^-1 = 1 for all nonzero a
    for (u64 v = 1; v < 9; ++v) {
        auto a = spec.from_index(v);
        CHECK(spec.mul(a, spec.inv(a)) == spec.one());
    }
    CHECK_THROWS_AS(spec.inv(spec.zero()), std::invalid_argument);
    FieldElement alien{{1, 0, 0}};
    CHECK_THROWS_AS(spec.add(onex, alien), std::invalid_argument);
}

TEST_CASE("trace") {
    auto f9 = FieldSpec::build(3, 2);
    // Frobenius is x -> -x under x^2+1, so trace(x) = 0
    CHECK(f9.trace(FieldElement{{0, 1}}) == 0);
    // scalars: trace(c) = f*c mod p
    auto f27 = FieldSpec::build(3, 3);
    CHECK(f27.trace(f27.from_scalar(1)) == 0);
    CHECK(f27.trace(f27.from_scalar(2)) == 0);
    auto f25 = FieldSpec::build(5, 2);
    CHECK(f25.trace(f25.from_scalar(1)) == 2);
    // linearity on sampled pairs
    for (u64 a = 0; a < 27; ++a)
        for (u64 b = 0; b < 27; ++b) {
            auto x = f27.from_index(a), y = f27.from_index(b);
            CHECK((f27.trace(x) + f27.trace(y)) % 3 == f27.trace(f27.add(x, y)));
        }
    // trace against the explicit Frobenius sum
    for (u64 a = 0; a < 27; ++a) {
        auto x = f27.from_index(a);
        auto fr = x;
        auto acc = x;
        for (unsigned i = 1; i < 3; ++i) {
            fr = f27.pow(fr, Int(3));
            acc = f27.add(acc, fr);
        }
        for (size_t i = 1; i < acc.c.size(); ++i) CHECK(acc.c[i] == 0);
        CHECK(acc.c[0] == f27.trace(x));
    }
}

TEST_CASE("every trace value is attained q/p times") {
    for (auto [p, f] : std::vector<std::pair<u64, unsigned>>{{3, 6}, {5, 4}, {7, 3}, {2, 9}}) {
        auto spec = FieldSpec::build(p, f);
        u64 q = to_u64(spec.q());
        std::map<u64, u64> counts;
        counts[spec.trace(spec.zero())]++;
        GammaOrbit orbit(spec, 0);
        for (u64 i = 0; i + 1 < q; ++i) {
            counts[orbit.trace()]++;
            orbit.advance();
        }
        CHECK(counts.size() == p);
        for (auto [c, n] : counts) CHECK(n == q / p);
    }
}

TEST_CASE("find_primitive reference values") {
    CHECK(FieldSpec::build(5, 1).gamma() == FieldSpec::build(5, 1).from_scalar(2));
    CHECK(FieldSpec::build(2, 1).gamma().c == std::vector<std::uint32_t>{1});
    CHECK(FieldSpec::build(3, 2).gamma().c == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("gamma powers enumerate the whole multiplicative group") {
    for (auto [p, f] : std::vector<std::pair<u64, unsigned>>{{5, 1}, {3, 2}, {2, 4}, {7, 2}, {3, 4}, {97, 1}}) {
        auto spec = FieldSpec::build(p, f);
        u64 q = to_u64(spec.q());
        std::set<u64> seen;
        GammaOrbit orbit(spec, 0);
        for (u64 i = 0; i + 1 < q; ++i) {
            seen.insert(spec.to_index(orbit.current()));
            orbit.advance();
        }
        CHECK(seen.size() == q - 1);
        CHECK_FALSE(seen.count(0));
    }
}

TEST_CASE("build_field is deterministic") {
    auto a = FieldSpec::build(7, 3);
    auto b = FieldSpec::build(7, 3);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.gamma() == b.gamma());
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("orbit seeded mid-range agrees with a full walk") {
    auto spec = FieldSpec::build(3, 4);
    GammaOrbit full(spec, 0);
    for (u64 i = 0; i < 17; ++i) full.advance();
    GammaOrbit seeded(spec, 17);
    CHECK(full.current() == seeded.current());
}

TEST_CASE("with_gamma validates and rebuilds") {
    auto spec = FieldSpec::build(3, 2);
    // gamma^3 has order 8 as well since gcd(3, 8) = 1
    auto g3 = spec.pow(spec.gamma(), Int(3));
    auto alt = spec.with_gamma(g3);
    CHECK(alt.gamma() == g3);
    CHECK(alt.element_order(alt.gamma()) == 8);
    // gamma^2 has order 4: rejected
    CHECK_THROWS_AS(spec.with_gamma(spec.pow(spec.gamma(), Int(2))), std::invalid_argument);
}

TEST_CASE("json shape") {
    auto spec = FieldSpec::build(3, 2);
    CHECK(spec.to_json() == R"({"p":3,"f":2,"modulus":[1,0,1],"gamma":[1,1]})");
}
