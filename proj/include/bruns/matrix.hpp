#ifndef BRUNS_MATRIX_HPP
#define BRUNS_MATRIX_HPP

#include <optional>
#include <vector>

#include "bruns/poly.hpp"

namespace bruns {

struct FreeModuleSpec {
    int rank = 0;
    std::optional<std::vector<int>> degrees;  // one generator degree per basis element

    FreeModuleSpec() = default;
    explicit FreeModuleSpec(int r) : rank(r) {}
    FreeModuleSpec(int r, std::vector<int> degs);

    bool graded() const { return degrees.has_value(); }
    bool operator==(const FreeModuleSpec& o) const {
        return rank == o.rank && degrees == o.degrees;
    }
};

// Ideal of R given by a generator list; empty list is the zero ideal.
struct IdealData {
    Ring ring;
    std::vector<Polynomial> generators;  // nonzero, deduplicated

    IdealData() = default;
    IdealData(Ring r, std::vector<Polynomial> gens);  // drops zeros, dedups

    bool is_zero() const { return generators.empty(); }
    bool contains_unit() const;
};

// Map between free modules; rows = target rank, cols = source rank.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(Ring ring, FreeModuleSpec source, FreeModuleSpec target);
    PolyMatrix(Ring ring, FreeModuleSpec source, FreeModuleSpec target,
               std::vector<Polynomial> entries);  // row-major

    static PolyMatrix identity(const Ring& ring, const FreeModuleSpec& spec);
    static PolyMatrix zero(const Ring& ring, const FreeModuleSpec& source,
                           const FreeModuleSpec& target);

    const Ring& ring() const { return ring_; }
    const FreeModuleSpec& source() const { return source_; }
    const FreeModuleSpec& target() const { return target_; }
    int rows() const { return target_.rank; }
    int cols() const { return source_.rank; }

    const Polynomial& at(int i, int j) const { return entries_[i * cols() + j]; }
    Polynomial& at(int i, int j) { return entries_[i * cols() + j]; }

    std::vector<Polynomial> column(int j) const;
    bool is_zero() const;
    // graded homogeneity: every nonzero entry (i,j) homogeneous of degree
    // source.degrees[j] - target.degrees[i]
    bool is_graded_consistent() const;
    bool operator==(const PolyMatrix& o) const;

    void set_source_degrees(std::vector<int> degs);
    void set_target_degrees(std::vector<int> degs);

  private:
    Ring ring_;
    FreeModuleSpec source_, target_;
    std::vector<Polynomial> entries_;
};

PolyMatrix compose(const PolyMatrix& f, const PolyMatrix& g);  // f after g
PolyMatrix dual(const PolyMatrix& f);
PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);  // same target

// Fraction-free Bareiss elimination; exact rank over the fraction field.
int matrix_rank(const PolyMatrix& f);

Polynomial poly_determinant(const PolyMatrix& f);  // square submatrix helper

// Ideal of all t x t minors (deduplicated, zero minors dropped).
IdealData minor_ideal(const PolyMatrix& f, int t);
IdealData minor_ideal_serial(const PolyMatrix& f, int t);  // reference path

// Rank of the scalar matrix obtained by evaluating every entry at a point.
int evaluation_rank(const PolyMatrix& f, const std::vector<uint32_t>& point);

}  // namespace bruns

#endif
