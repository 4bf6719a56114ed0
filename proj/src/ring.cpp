#include "bruns/ring.hpp"

#include <algorithm>
#include <set>

namespace bruns {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

RingSpec::RingSpec(uint32_t p, std::vector<std::string> vars, MonomialOrder ord)
    : characteristic(p), variables(std::move(vars)), order(ord) {
    if (!is_prime(p)) throw error("ring characteristic must be prime");
    if (variables.empty()) throw error("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw error("empty variable name");
        if (!seen.insert(v).second) throw error("duplicate variable name: " + v);
    }
}

int RingSpec::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (variables[i] == name) return i;
    return -1;
}

Ring make_ring(uint32_t p, std::vector<std::string> vars, MonomialOrder ord) {
    return std::make_shared<const RingSpec>(p, std::move(vars), ord);
}

uint32_t fp_pow(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t base = a % p, r = 1;
    while (e) {
        if (e & 1) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t fp_inv(uint32_t a, uint32_t p) {
    if (a == 0) throw error("inverse of zero");
    return fp_pow(a, p - 2, p);
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
}

bool Monomial::is_one() const {
    for (int e : exponents)
        if (e != 0) return false;
    return true;
}

bool Monomial::divides(const Monomial& other) const {
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > other.exponents[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += o.exponents[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < exponents.size(); ++i) {
        r.exponents[i] -= o.exponents[i];
        if (r.exponents[i] < 0) throw error("monomial division not exact");
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.exponents.size(); ++i)
        r.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exponents.size(); ++i)
        if (a.exponents[i] > 0 && b.exponents[i] > 0) return false;
    return true;
}

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (order == MonomialOrder::lex) {
        for (size_t i = 0; i < a.exponents.size(); ++i) {
            if (a.exponents[i] != b.exponents[i])
                return a.exponents[i] > b.exponents[i] ? 1 : -1;
        }
        return 0;
    }
    // grevlex: higher total degree wins; on ties the rightmost nonzero
    // entry of a-b being negative means a > b.
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = a.exponents.size(); i-- > 0;) {
        if (a.exponents[i] != b.exponents[i])
            return a.exponents[i] < b.exponents[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace bruns
