#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "bruns/koszul.hpp"
#include "bruns/matrix.hpp"

using namespace bruns;

namespace {

Ring r3() { return make_ring(101, {"x", "y", "z"}); }

Polynomial P(const Ring& ring, const std::string& s) { return parse_poly(ring, s); }

PolyMatrix from_rows(const Ring& ring, int rows, int cols,
                     const std::vector<std::string>& entries) {
    std::vector<Polynomial> polys;
    for (const auto& s : entries) polys.push_back(P(ring, s));
    return PolyMatrix(ring, FreeModuleSpec(cols), FreeModuleSpec(rows), polys);
}

std::vector<Polynomial> variables(const Ring& ring) {
    std::vector<Polynomial> v;
    for (int i = 0; i < ring->nvars(); ++i) v.push_back(Polynomial::variable(ring, i));
    return v;
}

PolyMatrix random_matrix(const Ring& ring, RandomSource& rng, int rows, int cols,
                         int maxdeg) {
    PolyMatrix f(ring, FreeModuleSpec(cols), FreeModuleSpec(rows));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Polynomial e = Polynomial::zero(ring);
            for (int d = 0; d <= maxdeg; ++d) e = e + random_form(ring, d, rng, true);
            f.at(i, j) = e;
        }
    return f;
}

bool same_generators(const IdealData& a, const IdealData& b) {
    if (a.generators.size() != b.generators.size()) return false;
    for (const auto& g : a.generators)
        if (std::find(b.generators.begin(), b.generators.end(), g) == b.generators.end())
            return false;
    return true;
}

}  // namespace

TEST_CASE("compose identities and Koszul relations") {
    Ring ring = r3();
    ResolutionData K = koszul_complex(variables(ring));
    const PolyMatrix& d1 = K.differentials[0];
    const PolyMatrix& d2 = K.differentials[1];
    CHECK(compose(PolyMatrix::identity(ring, d1.target()), d1) == d1);
    CHECK(compose(d1, d2).is_zero());
    PolyMatrix row = from_rows(ring, 1, 2, {"x", "y"});
    PolyMatrix col = from_rows(ring, 2, 1, {"y", "-x"});
    PolyMatrix prod = compose(row, col);
    CHECK(prod.rows() == 1);
    CHECK(prod.cols() == 1);
    CHECK(prod.is_zero());
    CHECK_THROWS_AS(compose(row, row), error);
}

TEST_CASE("dual is an involutive transpose") {
    Ring ring = r3();
    PolyMatrix row = from_rows(ring, 1, 3, {"x", "y", "z"});
    PolyMatrix col = dual(row);
    CHECK(col.rows() == 3);
    CHECK(col.cols() == 1);
    CHECK(col.at(2, 0) == P(ring, "z"));
    CHECK(dual(col) == row);
    PolyMatrix z = PolyMatrix::zero(ring, FreeModuleSpec(2), FreeModuleSpec(3));
    CHECK(dual(z).is_zero());
}

TEST_CASE("dual negates degrees") {
    Ring ring = r3();
    PolyMatrix row(ring, FreeModuleSpec(2, {1, 2}), FreeModuleSpec(1, {0}));
    row.at(0, 0) = P(ring, "x");
    row.at(0, 1) = P(ring, "x*y");
    REQUIRE(row.is_graded_consistent());
    PolyMatrix d = dual(row);
    CHECK(*d.source().degrees == std::vector<int>{0});
    CHECK(*d.target().degrees == std::vector<int>{-1, -2});
    CHECK(d.is_graded_consistent());
}

TEST_CASE("matrix_rank by fraction-free elimination") {
    Ring ring = r3();
    ResolutionData K = koszul_complex(variables(ring));
    CHECK(matrix_rank(K.differentials[0]) == 1);
    CHECK(matrix_rank(PolyMatrix::zero(ring, FreeModuleSpec(3), FreeModuleSpec(2))) == 0);
    const PolyMatrix& d2 = K.differentials[1];
    CHECK(matrix_rank(d2) == 2);
    // cross-check by evaluation at 5 points
    RandomSource rng(11);
    int best = 0;
    for (int t = 0; t < 5; ++t) {
        std::vector<uint32_t> pt;
        for (int v = 0; v < 3; ++v) pt.push_back(rng.scalar(101));
        best = std::max(best, evaluation_rank(d2, pt));
    }
    CHECK(best == 2);
}

TEST_CASE("minor_ideal matches hand enumeration") {
    Ring ring = r3();
    PolyMatrix row = from_rows(ring, 1, 3, {"x", "y", "z"});
    IdealData t1 = minor_ideal(row, 1);
    CHECK(same_generators(t1, IdealData(ring, {P(ring, "x"), P(ring, "y"), P(ring, "z")})));

    PolyMatrix id2 = PolyMatrix::identity(ring, FreeModuleSpec(2));
    IdealData u = minor_ideal(id2, 2);
    REQUIRE(u.generators.size() == 1);
    CHECK(u.contains_unit());

    ResolutionData K = koszul_complex(variables(ring));
    IdealData sq = minor_ideal(K.differentials[1], 2);
    IdealData expect(ring, {P(ring, "x^2"), P(ring, "x*y"), P(ring, "x*z"),
                            P(ring, "y^2"), P(ring, "y*z"), P(ring, "z^2")});
    CHECK(same_generators(sq, expect));

    CHECK_THROWS_AS(minor_ideal(row, 2), error);
    CHECK_THROWS_AS(minor_ideal(row, 0), error);
}

TEST_CASE("parallel and serial minor enumeration agree") {
    Ring ring = r3();
    RandomSource rng(17);
    for (int n = 3; n <= 5; ++n) {
        PolyMatrix f = random_matrix(ring, rng, n, n, 1);
        for (int t = 1; t <= n; ++t) {
            IdealData a = minor_ideal(f, t);
            IdealData b = minor_ideal_serial(f, t);
            REQUIRE(a.generators.size() == b.generators.size());
            for (size_t k = 0; k < a.generators.size(); ++k)
                CHECK(a.generators[k] == b.generators[k]);
        }
    }
}

TEST_CASE("rank is dual-invariant and submultiplicative") {
    Ring ring = r3();
    RandomSource rng(23);
    for (int round = 0; round < 12; ++round) {
        int a = 1 + static_cast<int>(rng.below(4));
        int b = 1 + static_cast<int>(rng.below(4));
        int c = 1 + static_cast<int>(rng.below(4));
        PolyMatrix f = random_matrix(ring, rng, a, b, 1);
        PolyMatrix g = random_matrix(ring, rng, b, c, 1);
        CHECK(matrix_rank(f) == matrix_rank(dual(f)));
        CHECK(matrix_rank(compose(f, g)) <= std::min(matrix_rank(f), matrix_rank(g)));
    }
}

TEST_CASE("Bareiss rank equals evaluation rank on seeded matrices") {
    Ring ring = make_ring(32003, {"x", "y", "z"});
    RandomSource rng(31);
    for (int round = 0; round < 100; ++round) {
        int rows = 1 + static_cast<int>(rng.below(5));
        int cols = 1 + static_cast<int>(rng.below(5));
        PolyMatrix f = random_matrix(ring, rng, rows, cols, 2);
        int exact = matrix_rank(f);
        int best = 0;
        for (int t = 0; t < 5; ++t) {
            std::vector<uint32_t> pt;
            for (int v = 0; v < 3; ++v) pt.push_back(rng.scalar(32003));
            best = std::max(best, evaluation_rank(f, pt));
        }
        CHECK(best == exact);
    }
}

TEST_CASE("minor ideals at rank and past rank") {
    Ring ring = r3();
    RandomSource rng(41);
    for (int round = 0; round < 10; ++round) {
        PolyMatrix f = random_matrix(ring, rng, 3, 3, 1);
        int r = matrix_rank(f);
        if (r > 0) CHECK_FALSE(minor_ideal(f, r).is_zero());
        if (r < std::min(f.rows(), f.cols())) CHECK(minor_ideal(f, r + 1).is_zero());
    }
}

TEST_CASE("graded consistency detects misplaced entries") {
    Ring ring = r3();
    PolyMatrix f(ring, FreeModuleSpec(1, {1}), FreeModuleSpec(2, {0, 0}));
    f.at(0, 0) = P(ring, "x");
    f.at(1, 0) = P(ring, "y");
    CHECK(f.is_graded_consistent());
    f.at(1, 0) = P(ring, "y^2");
    CHECK_FALSE(f.is_graded_consistent());
}

TEST_CASE("hstack concatenates columns over a shared target") {
    Ring ring = r3();
    PolyMatrix a = from_rows(ring, 2, 1, {"x", "y"});
    PolyMatrix b = from_rows(ring, 2, 2, {"z", "0", "0", "z"});
    PolyMatrix ab = hstack(a, b);
    CHECK(ab.cols() == 3);
    CHECK(ab.at(0, 0) == P(ring, "x"));
    CHECK(ab.at(1, 2) == P(ring, "z"));
    PolyMatrix c = from_rows(ring, 1, 1, {"x"});
    CHECK_THROWS_AS(hstack(a, c), error);
}

TEST_CASE("determinant on small matrices") {
    Ring ring = r3();
    PolyMatrix f = from_rows(ring, 2, 2, {"x", "y", "z", "x"});
    CHECK(poly_determinant(f) == P(ring, "x^2-y*z"));
    CHECK(poly_determinant(PolyMatrix::identity(ring, FreeModuleSpec(3))) ==
          P(ring, "1"));
}
