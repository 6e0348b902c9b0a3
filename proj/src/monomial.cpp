#include "algdesign/monomial.hpp"

#include <algorithm>

#include "algdesign/errors.hpp"

namespace algdesign {

namespace {

void require_same_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw DimensionError("monomial arity mismatch");
}

}  // namespace

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
    if (index >= arity) throw DimensionError("variable index out of range");
    Monomial m(arity);
    m.exps_[index] = power;
    return m;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    require_same_arity(*this, other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
    require_same_arity(*this, other);
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
    return *this;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    if (!divisor.divides(*this)) throw InvalidArgument("monomial is not divisible");
    Monomial q = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= divisor.exps_[i];
    return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial m(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial m(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) m[i] = std::min(a[i], b[i]);
    return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : m.exponents()) {
        h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace algdesign
