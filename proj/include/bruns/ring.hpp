#ifndef BRUNS_RING_HPP
#define BRUNS_RING_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace bruns {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class MonomialOrder { grevlex, lex };

// Ambient ring F_p[x_1,...,x_d] with a fixed monomial order.
struct RingSpec {
    uint32_t characteristic = 32003;
    std::vector<std::string> variables;
    MonomialOrder order = MonomialOrder::grevlex;

    RingSpec() = default;
    RingSpec(uint32_t p, std::vector<std::string> vars,
             MonomialOrder ord = MonomialOrder::grevlex);

    int nvars() const { return static_cast<int>(variables.size()); }
    int var_index(const std::string& name) const;  // -1 if absent

    bool operator==(const RingSpec& o) const {
        return characteristic == o.characteristic && variables == o.variables &&
               order == o.order;
    }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }
};

using Ring = std::shared_ptr<const RingSpec>;

Ring make_ring(uint32_t p, std::vector<std::string> vars,
               MonomialOrder ord = MonomialOrder::grevlex);

bool is_prime(uint32_t n);

// F_p scalar arithmetic, values kept in [0, p).
inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}
inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }
inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}
uint32_t fp_pow(uint32_t a, uint64_t e, uint32_t p);
uint32_t fp_inv(uint32_t a, uint32_t p);
inline uint32_t fp_reduce(long long v, uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

// Exponent vector; length always equals the ring's variable count.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(int nvars) : exponents(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    int degree() const;
    bool is_one() const;
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& o) const;
    // quotient this / o; caller must check divisibility
    Monomial operator/(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Three-way comparison in the given order: <0 if a < b, 0 if equal, >0 if a > b.
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

}  // namespace bruns

#endif
