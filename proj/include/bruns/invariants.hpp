#ifndef BRUNS_INVARIANTS_HPP
#define BRUNS_INVARIANTS_HPP

#include "bruns/groebner.hpp"

namespace bruns {

// Grade of an ideal; the unit ideal gets an explicit +infinity sentinel
// ordered above every integer.
struct Grade {
    bool infinite = false;
    int value = 0;

    static Grade inf() { return Grade{true, 0}; }
    static Grade of(int v) { return Grade{false, v}; }
    bool at_least(int k) const { return infinite || value >= k; }
    bool operator==(const Grade& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator<=(const Grade& o) const {
        if (o.infinite) return true;
        if (infinite) return false;
        return value <= o.value;
    }
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

Grade grade(const IdealData& ideal);

// Buchsbaum-Eisenbud ideal I(f): rank(f)-sized minors; unit ideal for rank 0.
IdealData be_ideal(const PolyMatrix& f);

struct ExactnessPosition {
    int position = 0;    // homological position k, 1-based
    int rank_module = 0;  // rank F_k
    int rank_map = 0;     // rank f_k
    int rank_next = 0;    // rank f_{k+1} (0 past the end)
    Grade grade_value;    // grade of I(f_k)
    bool rank_ok = false;
    bool grade_ok = false;
};

struct ExactnessCertificate {
    std::vector<ExactnessPosition> positions;
    bool pass = false;
    int first_fail = -1;  // position index, -1 when pass
};

ExactnessCertificate check_exactness(const ResolutionData& complex);

struct TorsionlessStep {
    int index = 0;  // differential index i along M's own resolution
    Grade grade_value;
    int required = 0;  // m + i
    bool ok = false;
};

struct TorsionlessCertificate {
    int m = 0;
    ResolutionData resolution;
    std::vector<TorsionlessStep> steps;
    bool pass = false;
};

// Grade criterion along M's own resolution: M = Coker(presentation) is an
// m-th syzygy when grade(I(g_i)) >= m + i at every differential g_i.
TorsionlessCertificate check_torsionless(const PolyMatrix& presentation, int m);

// Unit-entry cancellation on a single presentation matrix.
PolyMatrix prune_presentation(const PolyMatrix& presentation);

// mu(M) for a graded presentation; refuses ungraded input.
int minimal_generator_count(const PolyMatrix& presentation);

}  // namespace bruns

#endif
