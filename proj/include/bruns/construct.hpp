#ifndef BRUNS_CONSTRUCT_HPP
#define BRUNS_CONSTRUCT_HPP

#include "bruns/invariants.hpp"

namespace bruns {

// randomized search ran out of attempts; reseeding may help
struct search_exhausted : error {
    explicit search_exhausted(const std::string& msg) : error(msg) {}
};

// an exactly-verified postcondition failed
struct certification_error : error {
    explicit certification_error(const std::string& msg) : error(msg) {}
};

// Module given as cokernel of its presentation matrix.
struct PresentedModule {
    PolyMatrix presentation;

    PresentedModule() = default;
    explicit PresentedModule(PolyMatrix pres) : presentation(std::move(pres)) {}

    const Ring& ring() const { return presentation.ring(); }
    int ambient_rank() const { return presentation.rows(); }
    int rank() const { return presentation.rows() - matrix_rank(presentation); }
    bool graded() const {
        return presentation.source().graded() && presentation.target().graded();
    }
};

struct SearchConfig {
    uint64_t seed = 0;
    int max_attempts = 8;
};

struct EmbeddingStep {
    PolyMatrix embedding;  // ambient(M) -> R^t, kills the presentation
    PresentedModule cokernel;
    int torsionless_level = 0;
};

struct RankReduction {
    PolyMatrix basis_change;                 // columns e_1..e_{s-1}, x_s..x_n
    std::vector<ModuleElement> quotiented;   // the x_i, in R^n
    std::vector<ModuleElement> quotient_images;  // g(x_i) in ambient(M)
    PresentedModule quotient;                // M', rank m
    PolyMatrix compressed_cover;             // R^{s-1} -> ambient(M')
    TorsionlessCertificate certificate;
    int attempts_used = 0;
};

struct BrunsResult {
    ResolutionData complex;
    PolyMatrix compression;  // the map c
    IdealData ideal;
    ExactnessCertificate exactness;
    std::vector<TorsionlessCertificate> torsionless;
    int attempts_used = 0;
};

// Auslander transpose: cokernel of the dualized presentation.
PresentedModule transpose_module(const PresentedModule& M);

// 0 -> M -> R^t -> N -> 0 with N (m-1)-torsionless, via the dualized
// syzygy of the dual presentation; injectivity is verified, not assumed.
EmbeddingStep embed_in_free(const PresentedModule& M, int m);

// x = e_n + sum a_i e_i with generic coefficients such that M/Rg(x) stays
// m-torsionless with rank dropped by one.
ModuleElement find_basic_combination(const PolyMatrix& g, const PresentedModule& M,
                                     int m, const SearchConfig& cfg);

RankReduction reduce_rank(const PolyMatrix& g, const PresentedModule& M, int m,
                          const SearchConfig& cfg);

// Free submodule F of M with M/F m-torsionless of rank m.
std::pair<std::vector<ModuleElement>, PresentedModule> bourbaki_split(
    const PresentedModule& M, int m, const SearchConfig& cfg);

// Generic-projection realization of a 1-torsionless rank-1 module as an ideal.
std::pair<IdealData, PolyMatrix> realize_as_ideal(const PresentedModule& M,
                                                  const SearchConfig& cfg);

// Chain R^{r+m-1} -> R^{2m-3} -> ... -> R^3 -> R below M, returned with
// f_1 the final map into R and f_m the map out of ambient(M).
ResolutionData corollary1_chain(const PresentedModule& M, int m,
                                const SearchConfig& cfg);

BrunsResult brunsify(const ResolutionData& res, int m, const SearchConfig& cfg);

// Same rewrite applied to a complex whose first differential presents the
// module being compressed (the tail f_{m+1}..f_n of a larger resolution).
BrunsResult brunsify_tail(const ResolutionData& tail, int m, const SearchConfig& cfg);

// m-torsionless module of rank m and projective dimension s, generated by
// at most 2m+1 elements, over a fresh ring in s+m variables.
std::pair<PresentedModule, ResolutionData> build_pd_module(int s, int m, uint32_t p,
                                                           const SearchConfig& cfg);

std::vector<std::string> default_variable_names(int d);

}  // namespace bruns

#endif
