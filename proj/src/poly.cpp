#include "bruns/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace bruns {

static std::vector<Term> normalize_terms(const Ring& ring, std::vector<Term> terms) {
    const auto order = ring->order;
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(a.mono, b.mono, order) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    const uint32_t p = ring->characteristic;
    for (auto& t : terms) {
        uint32_t c = t.coef % p;
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coef = fp_add(out.back().coef, c, p);
            if (out.back().coef == 0) out.pop_back();
        } else if (c != 0) {
            out.push_back(Term{c, std::move(t.mono)});
        }
    }
    return out;
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    for (const auto& t : terms)
        if (static_cast<int>(t.mono.exponents.size()) != ring_->nvars())
            throw error("monomial length does not match ring");
    terms_ = normalize_terms(ring_, std::move(terms));
}

Polynomial Polynomial::constant(Ring ring, uint32_t c) {
    std::vector<Term> t;
    c %= ring->characteristic;
    if (c != 0) t.push_back(Term{c, Monomial(ring->nvars())});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(Ring ring, int index) {
    if (index < 0 || index >= ring->nvars()) throw error("variable index out of range");
    Monomial m(ring->nvars());
    m.exponents[index] = 1;
    return Polynomial(std::move(ring), {Term{1, std::move(m)}});
}

Polynomial Polynomial::monomial(Ring ring, uint32_t coef, Monomial m) {
    return Polynomial(std::move(ring), {Term{coef, std::move(m)}});
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::lead() const {
    if (terms_.empty()) throw error("lead term of zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous(int* deg_out) const {
    if (terms_.empty()) {
        if (deg_out) *deg_out = -1;
        return true;  // zero is homogeneous of every degree
    }
    int d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_) throw error("operation on ringless polynomial");
    if (ring_ != o.ring_ && *ring_ != *o.ring_) throw error("ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    const uint32_t p = ring_->characteristic;
    const auto order = ring_->order;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].mono, o.terms_[j].mono, order);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            uint32_t s = fp_add(terms_[i].coef, o.terms_[j].coef, p);
            if (s != 0) out.push_back(Term{s, terms_[i].mono});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = fp_neg(t.coef, ring_->characteristic);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(uint32_t c) const {
    const uint32_t p = ring_->characteristic;
    c %= p;
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = fp_mul(t.coef, c, p);
    return r;
}

Polynomial Polynomial::times_term(uint32_t coef, const Monomial& m) const {
    const uint32_t p = ring_->characteristic;
    coef %= p;
    Polynomial r(ring_);
    if (coef == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back(Term{fp_mul(t.coef, coef, p), t.mono * m});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial acc(ring_);
    for (const auto& t : o.terms_) acc = acc + times_term(t.coef, t.mono);
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coef != o.terms_[i].coef || terms_[i].mono != o.terms_[i].mono)
            return false;
    return true;
}

Polynomial Polynomial::exact_div(const Polynomial& o) const {
    check_same_ring(o);
    if (o.is_zero()) throw error("division by zero polynomial");
    const uint32_t p = ring_->characteristic;
    Polynomial rem = *this;
    Polynomial quot(ring_);
    const Term& lo = o.lead();
    uint32_t lo_inv = fp_inv(lo.coef, p);
    while (!rem.is_zero()) {
        const Term& lr = rem.lead();
        if (!lo.mono.divides(lr.mono)) throw error("polynomial division not exact");
        uint32_t qc = fp_mul(lr.coef, lo_inv, p);
        Monomial qm = lr.mono / lo.mono;
        quot = quot + Polynomial::monomial(ring_, qc, qm);
        rem = rem - o.times_term(qc, qm);
    }
    return quot;
}

uint32_t Polynomial::evaluate(const std::vector<uint32_t>& point) const {
    const uint32_t p = ring_->characteristic;
    uint32_t acc = 0;
    for (const auto& t : terms_) {
        uint32_t v = t.coef;
        for (size_t i = 0; i < point.size(); ++i)
            if (t.mono.exponents[i] > 0)
                v = fp_mul(v, fp_pow(point[i], t.mono.exponents[i], p), p);
        acc = fp_add(acc, v, p);
    }
    return acc;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << "+";
        first = false;
        bool printed = false;
        if (t.coef != 1 || t.mono.is_one()) {
            os << t.coef;
            printed = true;
        }
        for (int i = 0; i < ring_->nvars(); ++i) {
            int e = t.mono.exponents[i];
            if (e == 0) continue;
            if (printed) os << "*";
            os << ring_->variables[i];
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

// ---------------------------------------------------------------- parsing

namespace {

struct PolyParser {
    const Ring& ring;
    const std::string& s;
    size_t pos = 0;

    explicit PolyParser(const Ring& r, const std::string& text) : ring(r), s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw error("polynomial syntax error at offset " + std::to_string(pos) + ": " +
                    what + " in '" + s + "'");
    }

    uint64_t parse_int() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (1ull << 62)) fail("integer too large");
            ++pos;
        }
        return v;
    }

    std::string parse_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
        }
        if (pos == start) fail("expected identifier");
        return s.substr(start, pos - start);
    }

    // term := factor ('*' factor)* ; factor := int | var ['^' int]
    Term parse_term() {
        const uint32_t p = ring->characteristic;
        Term t{1, Monomial(ring->nvars())};
        bool more = true;
        while (more) {
            skip_ws();
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                t.coef = fp_mul(t.coef, static_cast<uint32_t>(parse_int() % p), p);
            } else if (pos < s.size() &&
                       (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                std::string name = parse_ident();
                int idx = ring->var_index(name);
                if (idx < 0) fail("unknown variable '" + name + "'");
                int e = 1;
                skip_ws();
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    e = static_cast<int>(parse_int());
                }
                t.mono.exponents[idx] += e;
            } else {
                fail("expected term factor");
            }
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
            } else {
                more = false;
            }
        }
        return t;
    }

    Polynomial parse() {
        const uint32_t p = ring->characteristic;
        std::vector<Term> terms;
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            neg = s[pos] == '-';
            ++pos;
        }
        while (true) {
            Term t = parse_term();
            if (neg) t.coef = fp_neg(t.coef, p);
            terms.push_back(std::move(t));
            skip_ws();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                neg = s[pos] == '-';
                ++pos;
            } else {
                break;
            }
        }
        skip_ws();
        if (pos != s.size()) fail("trailing characters");
        return Polynomial(ring, std::move(terms));
    }
};

}  // namespace

Polynomial parse_poly(const Ring& ring, const std::string& text) {
    PolyParser p(ring, text);
    p.skip_ws();
    if (p.pos < text.size() && text[p.pos] == '0') {
        size_t save = p.pos;
        ++p.pos;
        p.skip_ws();
        if (p.pos == text.size()) return Polynomial::zero(ring);
        p.pos = save;
    }
    return p.parse();
}

static void gen_monomials(const Ring& ring, int var, int remaining, Monomial& cur,
                          std::vector<Monomial>& out) {
    if (var == ring->nvars() - 1) {
        cur.exponents[var] = remaining;
        out.push_back(cur);
        cur.exponents[var] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.exponents[var] = e;
        gen_monomials(ring, var + 1, remaining - e, cur, out);
    }
    cur.exponents[var] = 0;
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree) {
    std::vector<Monomial> out;
    Monomial cur(ring->nvars());
    gen_monomials(ring, 0, degree, cur, out);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, ring->order) > 0;
    });
    return out;
}

Polynomial random_form(const Ring& ring, int degree, RandomSource& rng, bool allow_zero) {
    if (degree < 0) throw error("random_form: negative degree");
    const uint32_t p = ring->characteristic;
    if (degree == 0) {
        uint32_t c = allow_zero ? rng.scalar(p) : rng.nonzero_scalar(p);
        return Polynomial::constant(ring, c);
    }
    std::vector<Term> terms;
    for (auto& m : monomials_of_degree(ring, degree)) {
        uint32_t c = rng.scalar(p);
        if (c != 0) terms.push_back(Term{c, m});
    }
    return Polynomial(ring, std::move(terms));
}

}  // namespace bruns
