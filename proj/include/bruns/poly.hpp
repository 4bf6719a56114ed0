#ifndef BRUNS_POLY_HPP
#define BRUNS_POLY_HPP

#include <random>
#include <string>
#include <vector>

#include "bruns/ring.hpp"

namespace bruns {

struct Term {
    uint32_t coef = 0;  // in [1, p-1] when stored in a Polynomial
    Monomial mono;
};

// Sparse multivariate polynomial, terms strictly decreasing in the ring's
// monomial order; the empty term list is zero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    Polynomial(Ring ring, std::vector<Term> terms);  // normalizes

    static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(Ring ring, uint32_t c);
    static Polynomial variable(Ring ring, int index);
    static Polynomial monomial(Ring ring, uint32_t coef, Monomial m);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // nonzero scalar (degree-0 single term)
    bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }
    const Term& lead() const;
    int degree() const;  // total degree of lead-free max; -1 for zero
    bool is_homogeneous(int* deg_out = nullptr) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(uint32_t c) const;
    Polynomial times_term(uint32_t coef, const Monomial& m) const;
    // exact quotient this / o; throws if division is not exact
    Polynomial exact_div(const Polynomial& o) const;

    uint32_t evaluate(const std::vector<uint32_t>& point) const;

    std::string str() const;

  private:
    void check_same_ring(const Polynomial& o) const;

    Ring ring_;
    std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

Polynomial parse_poly(const Ring& ring, const std::string& text);

// Deterministic random source; explicit value, never ambient state.
class RandomSource {
  public:
    explicit RandomSource(uint64_t seed) : eng_(seed) {}
    uint64_t next() { return eng_(); }
    uint32_t below(uint32_t n) { return static_cast<uint32_t>(eng_() % n); }
    uint32_t scalar(uint32_t p) { return below(p); }
    uint32_t nonzero_scalar(uint32_t p) { return 1 + below(p - 1); }

  private:
    std::mt19937_64 eng_;
};

// Homogeneous form of the given degree with coefficients uniform in F_p.
// Degree 0 yields a scalar, nonzero unless allow_zero is set.
Polynomial random_form(const Ring& ring, int degree, RandomSource& rng,
                       bool allow_zero = false);

// All monomials of the given total degree, in decreasing ring order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree);

}  // namespace bruns

#endif
