#include "cyclosrg/cycint.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclosrg {

CycInt::CycInt(u64 n) : n_(n), c_(n >= 2 ? n - 1 : 0) {
    if (!is_prime(n)) throw std::invalid_argument("CycInt: order must be prime");
}

CycInt::CycInt(u64 n, const Int& rational) : CycInt(n) { c_[0] = rational; }

CycInt CycInt::from_raw(u64 n, std::vector<Int> raw) {
    CycInt r(n);
    if (raw.size() > n) throw std::invalid_argument("CycInt::from_raw: too many coefficients");
    raw.resize(n, Int(0));
    // zeta^(n-1) = -(1 + zeta + ... + zeta^(n-2))
    for (u64 i = 0; i + 1 < n; ++i) r.c_[i] = raw[i] - raw[n - 1];
    return r;
}

CycInt CycInt::zeta_power(u64 n, u64 k) {
    std::vector<Int> raw(n, Int(0));
    raw[k % n] = 1;
    return from_raw(n, std::move(raw));
}

bool CycInt::is_zero() const {
    for (const auto& v : c_)
        if (sgn(v) != 0) return false;
    return true;
}

bool CycInt::is_rational_integer() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Int CycInt::as_integer() const {
    if (!is_rational_integer()) throw std::domain_error("CycInt::as_integer: value is irrational");
    return c_.empty() ? Int(0) : c_[0];
}

void CycInt::check_compatible(const CycInt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycInt: mixed root-of-unity orders");
}

CycInt CycInt::operator+(const CycInt& o) const {
    check_compatible(o);
    CycInt r(n_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
    check_compatible(o);
    CycInt r(n_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r(n_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    check_compatible(o);
    std::vector<Int> raw(n_, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (sgn(o.c_[j]) == 0) continue;
            raw[(i + j) % n_] += c_[i] * o.c_[j];
        }
    }
    return from_raw(n_, std::move(raw));
}

CycInt CycInt::operator*(const Int& k) const {
    CycInt r(n_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * k;
    return r;
}

bool CycInt::operator<(const CycInt& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

CycInt CycInt::galois(u64 t) const {
    if (std::gcd(t % n_, n_) != 1) throw std::invalid_argument("CycInt::galois: t not coprime to n");
    std::vector<Int> raw(n_, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[(i * (t % n_)) % n_] += c_[i];
    return from_raw(n_, std::move(raw));
}

std::complex<double> CycInt::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        double ang = 2.0 * std::numbers::pi * (double)i / (double)n_;
        acc += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string CycInt::to_string() const {
    if (is_rational_integer()) return as_integer().get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!first && sgn(c_[i]) > 0) os << "+";
        first = false;
        if (i == 0) { os << c_[i].get_str(); continue; }
        if (c_[i] == 1) {}
        else if (c_[i] == -1) os << "-";
        else os << c_[i].get_str() << "*";
        os << "z";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

} // namespace cyclosrg
