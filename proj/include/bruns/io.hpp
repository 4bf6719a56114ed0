#ifndef BRUNS_IO_HPP
#define BRUNS_IO_HPP

#include <string>
#include <utility>

#include "bruns/construct.hpp"

namespace bruns {

// Parsed session file: a ring header plus named matrix, complex and ideal
// blocks. Complexes are stored by matrix name; adjacency and d∘d = 0 are
// validated at parse time.
struct SessionDocument {
    Ring ring;
    std::vector<std::pair<std::string, PolyMatrix>> matrices;
    std::vector<std::pair<std::string, std::vector<std::string>>> complexes;
    std::vector<std::pair<std::string, IdealData>> ideals;

    const PolyMatrix& matrix(const std::string& name) const;
    bool has_matrix(const std::string& name) const;
    // assembles the named complex with grading inferred from f_1 outward
    ResolutionData complex_data(const std::string& name) const;
};

SessionDocument parse_document(const std::string& text);

std::string emit_document(const SessionDocument& doc);

// attach inferred degrees (target of f_1 placed in degree 0); returns the
// input unchanged when the entries are not homogeneous
ResolutionData infer_grading(const Ring& ring, std::vector<PolyMatrix> mats);

std::string certificate_json(const ExactnessCertificate& exact,
                             const TorsionlessCertificate* torsionless);

// CLI entry point; returns the process exit status (0 ok, 1 usage/parse,
// 2 certification failure, 3 search exhausted)
int run_command(const std::vector<std::string>& argv);

}  // namespace bruns

#endif
