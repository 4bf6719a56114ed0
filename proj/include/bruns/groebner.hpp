#ifndef BRUNS_GROEBNER_HPP
#define BRUNS_GROEBNER_HPP

#include "bruns/matrix.hpp"

namespace bruns {

// Element of a free module R^k, one polynomial per basis component.
struct ModuleElement {
    Ring ring;
    std::vector<Polynomial> components;

    ModuleElement() = default;
    ModuleElement(Ring r, int rank);
    ModuleElement(Ring r, std::vector<Polynomial> comps);

    int rank() const { return static_cast<int>(components.size()); }
    bool is_zero() const;
    // position of the lead term under position-over-term; -1 for zero
    int lead_position() const;
    const Term& lead_term() const;

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement times_term(uint32_t coef, const Monomial& m) const;
    ModuleElement scaled(uint32_t c) const;
    bool operator==(const ModuleElement& o) const;
};

// Reduced Groebner basis of a submodule of a free module, position-over-term.
struct GroebnerBasisData {
    FreeModuleSpec ambient;
    std::vector<ModuleElement> generators;
};

struct ResolutionData {
    Ring ring;
    std::vector<PolyMatrix> differentials;  // f_1: F_1 -> F_0 first
    bool minimal = false;

    int length() const { return static_cast<int>(differentials.size()); }
    void validate() const;  // composability and d∘d = 0
    std::vector<int> free_ranks() const;  // rank F_0, F_1, ...
};

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasisData& basis);

GroebnerBasisData buchberger(const std::vector<ModuleElement>& gens,
                             const FreeModuleSpec& ambient, const Ring& ring);

GroebnerBasisData column_basis(const PolyMatrix& f);

bool in_submodule(const ModuleElement& v, const GroebnerBasisData& basis);

// Matrix S with f*S = 0 whose columns generate Ker(f).
PolyMatrix syzygies(const PolyMatrix& f);

// Columns v of the identity-rank ambient with f*v in the column span of
// modulus; generators of the kernel of the induced map to Coker(modulus).
PolyMatrix kernel_to_cokernel(const PolyMatrix& f, const PolyMatrix& modulus);

ResolutionData resolve(const PolyMatrix& presentation, int max_length);

// Homotopy-equivalent resolution with no nonzero scalar entries.
ResolutionData prune(const ResolutionData& res);

// Krull dimension of R/ideal from the lead-term ideal; -1 for the unit ideal.
int quotient_dimension(const IdealData& ideal);

GroebnerBasisData ideal_basis(const IdealData& ideal);

// t-th Fitting-style minor ideal equality helper: I == J as ideals.
bool ideal_equal(const IdealData& a, const IdealData& b);

}  // namespace bruns

#endif
