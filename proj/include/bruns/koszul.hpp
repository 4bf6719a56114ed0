#ifndef BRUNS_KOSZUL_HPP
#define BRUNS_KOSZUL_HPP

#include "bruns/groebner.hpp"

namespace bruns {

struct KoszulSpec {
    std::vector<Polynomial> sequence;  // nonempty, entries nonzero

    explicit KoszulSpec(std::vector<Polynomial> seq);
};

// Full Koszul complex on the sequence: free ranks C(n,k), standard signed
// differentials, basis of each exterior power ordered lex on index subsets.
ResolutionData koszul_complex(const std::vector<Polynomial>& seq);

// Sub-chain between the named exterior powers in the cochain direction,
// re-indexed as a complex with F_0 the higher power.
ResolutionData koszul_section(const std::vector<Polynomial>& seq, int from_power,
                              int to_power);

}  // namespace bruns

#endif
