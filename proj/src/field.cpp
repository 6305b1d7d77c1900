#include "cyclosrg/field.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace cyclosrg {

namespace poly {

using Poly = std::vector<std::uint32_t>;

static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

static Poly reduce(Poly a, const Poly& m, u64 p) {
    // m is monic of degree deg_m
    int deg_m = (int)m.size() - 1;
    for (int i = (int)a.size() - 1; i >= deg_m; --i) {
        u64 c = a[i];
        if (!c) continue;
        a[i] = 0;
        for (int j = 0; j < deg_m; ++j)
            a[i - deg_m + j] = (std::uint32_t)((a[i - deg_m + j] + (p - (u64)m[j] * c % p)) % p);
    }
    a.resize(deg_m);
    return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
    if (a.empty() || b.empty()) return Poly{};
    std::vector<u64> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += (u64)a[i] * b[j] % p;
    }
    Poly out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) out[i] = (std::uint32_t)(acc[i] % p);
    return reduce(std::move(out), m, p);
}

static Poly pow_mod(Poly base, const Int& e, const Poly& m, u64 p) {
    Poly r{1};
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (sgn(e) == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = mul_mod(r, r, m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul_mod(r, base, m, p);
    }
    return r;
}

static Poly gcd(Poly a, Poly b, u64 p) {
    trim(a); trim(b);
    while (!b.empty()) {
        // a mod b with b made monic first
        u64 lead_inv = inv_mod(b.back(), p);
        Poly bm = b;
        for (auto& c : bm) c = (std::uint32_t)((u64)c * lead_inv % p);
        int deg_b = (int)bm.size() - 1;
        for (int i = (int)a.size() - 1; i >= deg_b; --i) {
            u64 c = a[i];
            if (!c) continue;
            for (int j = 0; j <= deg_b; ++j)
                a[i - deg_b + j] = (std::uint32_t)((a[i - deg_b + j] + (p - (u64)bm[j] * c % p)) % p);
        }
        trim(a);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const Poly& m, u64 p) {
    int f = (int)m.size() - 1;
    if (f < 1 || m.back() != 1) return false;
    if (f == 1) return true;
    if (m[0] == 0) return false; // x divides
    Poly x{0, 1};
    // x^(p^f) == x (mod m)
    Poly t = pow_mod(x, int_pow(p, f), m, p);
    Poly diff = t;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (std::uint32_t)((diff[1] + p - 1) % p);
    trim(diff);
    if (!diff.empty()) return false;
    // gcd(x^(p^(f/l)) - x, m) = 1 for each prime l | f
    for (auto [ell, e] : factorize((u64)f)) {
        (void)e;
        Poly s = pow_mod(x, int_pow(p, f / (int)ell), m, p);
        s.resize(std::max<size_t>(s.size(), 2), 0);
        s[1] = (std::uint32_t)((s[1] + p - 1) % p);
        Poly g = gcd(s, m, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

} // namespace poly

FieldElement FieldSpec::one() const { return from_scalar(1); }

FieldElement FieldSpec::from_scalar(u64 v) const {
    FieldElement e = zero();
    e.c[0] = (std::uint32_t)(v % p_);
    return e;
}

FieldElement FieldSpec::from_index(u64 v) const {
    FieldElement e = zero();
    for (unsigned i = 0; i < f_ && v; ++i) {
        e.c[i] = (std::uint32_t)(v % p_);
        v /= p_;
    }
    if (v) throw std::invalid_argument("from_index: value exceeds q-1");
    return e;
}

u64 FieldSpec::to_index(const FieldElement& a) const {
    check_member(a);
    u64 v = 0;
    for (unsigned i = f_; i-- > 0;) v = v * p_ + a.c[i];
    return v;
}

void FieldSpec::check_member(const FieldElement& a) const {
    if (a.c.size() != f_) throw std::invalid_argument("field element belongs to a different field");
    for (auto v : a.c)
        if (v >= p_) throw std::invalid_argument("field element coefficient out of range");
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
    check_member(a); check_member(b);
    FieldElement r = zero();
    for (unsigned i = 0; i < f_; ++i) r.c[i] = (std::uint32_t)(((u64)a.c[i] + b.c[i]) % p_);
    return r;
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
    check_member(a); check_member(b);
    FieldElement r = zero();
    for (unsigned i = 0; i < f_; ++i) r.c[i] = (std::uint32_t)(((u64)a.c[i] + p_ - b.c[i]) % p_);
    return r;
}

FieldElement FieldSpec::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
    check_member(a); check_member(b);
    auto prod = poly::mul_mod(a.c, b.c, modulus_, p_);
    prod.resize(f_, 0);
    return FieldElement{std::move(prod)};
}

FieldElement FieldSpec::pow(const FieldElement& a, const Int& e) const {
    check_member(a);
    Int exp = e;
    if (sgn(exp) < 0) {
        exp = -exp;
        return pow(inv(a), exp);
    }
    FieldElement r = one();
    size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (sgn(exp) == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(exp.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
}

FieldElement FieldSpec::inv(const FieldElement& a) const {
    check_member(a);
    if (a.is_zero()) throw std::invalid_argument("inversion of zero");
    return pow(a, q_ - 2);
}

u64 FieldSpec::trace(const FieldElement& x) const {
    check_member(x);
    u64 acc = 0;
    for (unsigned j = 0; j < f_; ++j) acc += trace_row_[j] * x.c[j];
    return acc % p_;
}

Int FieldSpec::element_order(const FieldElement& a) const {
    check_member(a);
    if (a.is_zero()) throw std::invalid_argument("element_order: zero has no order");
    Int ord = q_ - 1;
    for (auto [ell, e] : q1_factors_) {
        for (int i = 0; i < e; ++i) {
            Int cand = exact_div(ord, Int((unsigned long)ell));
            if (pow(a, cand) == one()) ord = cand; else break;
        }
    }
    return ord;
}

void FieldSpec::precompute() {
    // trace of each basis monomial via the Frobenius sum
    auto pow_p = [&](const std::vector<std::uint32_t>& a) {
        std::vector<std::uint32_t> r{1};
        Int e((unsigned long)p_);
        for (size_t bi = mpz_sizeinbase(e.get_mpz_t(), 2); bi-- > 0;) {
            r = poly::mul_mod(r, r, modulus_, p_);
            if (mpz_tstbit(e.get_mpz_t(), bi)) r = poly::mul_mod(r, a, modulus_, p_);
        }
        r.resize(f_, 0);
        return r;
    };
    trace_row_.assign(f_, 0);
    for (unsigned j = 0; j < f_; ++j) {
        std::vector<std::uint32_t> t(f_, 0);
        t[j] = 1;
        std::vector<u64> acc(f_, 0);
        for (unsigned i = 0; i < f_; ++i) {
            for (unsigned k = 0; k < f_; ++k) acc[k] += t[k];
            if (i + 1 < f_) t = pow_p(t);
        }
        for (unsigned k = 1; k < f_; ++k)
            if (acc[k] % p_ != 0) throw std::logic_error("trace of basis monomial is not scalar");
        trace_row_[j] = acc[0] % p_;
    }
    // multiplication-by-gamma matrix: column j = gamma * x^j mod modulus
    gamma_matrix_.assign((size_t)f_ * f_, 0);
    std::vector<std::uint32_t> col = gamma_.c;
    for (unsigned j = 0; j < f_; ++j) {
        for (unsigned r = 0; r < f_; ++r) gamma_matrix_[(size_t)r * f_ + j] = col[r];
        if (j + 1 < f_) {
            std::vector<std::uint32_t> xcol(f_ + 1, 0);
            for (unsigned r = 0; r < f_; ++r) xcol[r + 1] = col[r];
            col = poly::reduce(std::move(xcol), modulus_, p_);
            col.resize(f_, 0);
        }
    }
}

FieldSpec FieldSpec::build(u64 p, unsigned f, const Int& max_q) {
    if (!is_prime(p)) throw std::invalid_argument("build_field: p must be prime");
    if (f == 0) throw std::invalid_argument("build_field: f must be positive");
    FieldSpec spec;
    spec.p_ = p;
    spec.f_ = f;
    spec.q_ = int_pow(p, f);
    if (spec.q_ > max_q)
        throw BudgetError("build_field: q = " + to_string(spec.q_) + " exceeds enumeration budget " + to_string(max_q));

    // lexicographically least monic irreducible, coefficients compared
    // lowest degree first
    if (f == 1) {
        spec.modulus_ = {0, 1}; // x
    } else {
        u64 total = to_u64(spec.q_);
        bool found = false;
        std::vector<std::uint32_t> cand(f + 1, 0);
        cand[f] = 1;
        for (u64 v = 0; v < total; ++v) {
            u64 t = v;
            for (unsigned i = 0; i < f; ++i) { cand[f - 1 - i] = (std::uint32_t)(t % p); t /= p; }
            if (cand[0] == 0) continue;
            if (poly::is_irreducible(cand, p)) { found = true; break; }
        }
        if (!found) throw std::logic_error("build_field: no irreducible modulus found");
        spec.modulus_ = cand;
    }

    Int q1 = spec.q_ - 1;
    if (!fits_u64(q1)) throw BudgetError("build_field: q-1 does not fit the factorization budget");
    spec.q1_factors_ = factorize(to_u64(q1));

    // least primitive element in the induced element order
    {
        u64 total = to_u64(spec.q_);
        bool found = false;
        for (u64 v = 1; v < total; ++v) {
            FieldElement g = spec.from_index(v);
            bool primitive = true;
            for (auto [ell, e] : spec.q1_factors_) {
                (void)e;
                Int exp = exact_div(q1, Int((unsigned long)ell));
                if (spec.pow(g, exp) == spec.one()) { primitive = false; break; }
            }
            if (primitive) { spec.gamma_ = g; found = true; break; }
        }
        if (!found) throw std::logic_error("build_field: no primitive element found");
    }
    spec.precompute();
    return spec;
}

FieldSpec FieldSpec::with_gamma(const FieldElement& g) const {
    check_member(g);
    FieldSpec spec = *this;
    if (spec.element_order(g) != q_ - 1)
        throw std::invalid_argument("with_gamma: element is not primitive");
    spec.gamma_ = g;
    spec.precompute();
    return spec;
}

std::string FieldSpec::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p_;
    j["f"] = f_;
    j["modulus"] = modulus_;
    j["gamma"] = gamma_.c;
    return j.dump();
}

GammaOrbit::GammaOrbit(const FieldSpec& spec, u64 start_exponent)
    : p_(spec.p()), f_(spec.f()),
      matrix_(spec.gamma_matrix().data()), trace_row_(spec.trace_row().data()) {
    FieldElement s = spec.pow(spec.gamma(), Int((unsigned long)start_exponent));
    cur_.assign(s.c.begin(), s.c.end());
    nxt_.assign(f_, 0);
}

FieldElement GammaOrbit::current() const {
    FieldElement e;
    e.c.assign(cur_.begin(), cur_.end());
    return e;
}

} // namespace cyclosrg
