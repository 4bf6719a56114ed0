#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bruns/invariants.hpp"
#include "bruns/koszul.hpp"

using namespace bruns;

namespace {

Ring ring_n(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return make_ring(101, names);
}

std::vector<Polynomial> variables(const Ring& ring) {
    std::vector<Polynomial> v;
    for (int i = 0; i < ring->nvars(); ++i) v.push_back(Polynomial::variable(ring, i));
    return v;
}

int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<int>(r);
}

}  // namespace

TEST_CASE("koszul_complex ranks and the length-1 case") {
    Ring r1 = ring_n(1);
    ResolutionData K1 = koszul_complex(variables(r1));
    REQUIRE(K1.length() == 1);
    CHECK(K1.differentials[0].at(0, 0) == Polynomial::variable(r1, 0));

    Ring r3 = ring_n(3);
    ResolutionData K3 = koszul_complex(variables(r3));
    CHECK(K3.free_ranks() == std::vector<int>{1, 3, 3, 1});
    CHECK(check_exactness(K3).pass);

    Ring r4 = ring_n(4);
    ResolutionData K4 = koszul_complex(variables(r4));
    CHECK(K4.free_ranks() == std::vector<int>{1, 4, 6, 4, 1});
    K4.validate();
}

TEST_CASE("koszul_section produces the cochain truncations") {
    Ring r3 = ring_n(3);
    ResolutionData sec = koszul_section(variables(r3), 0, 1);
    REQUIRE(sec.length() == 1);
    const PolyMatrix& f = sec.differentials[0];
    REQUIRE(f.rows() == 3);
    REQUIRE(f.cols() == 1);
    for (int i = 0; i < 3; ++i) CHECK(f.at(i, 0) == Polynomial::variable(r3, i));

    // full range has the same ranks as the chain complex and is exact
    ResolutionData full = koszul_section(variables(r3), 0, 3);
    std::vector<int> ranks = full.free_ranks();
    std::reverse(ranks.begin(), ranks.end());
    CHECK(ranks == koszul_complex(variables(r3)).free_ranks());
    full.validate();
    CHECK(check_exactness(full).pass);

    Ring r5 = ring_n(5);
    ResolutionData wide = koszul_section(variables(r5), 0, 2);
    CHECK(wide.free_ranks() == std::vector<int>{10, 5, 1});
    wide.validate();

    CHECK_THROWS_AS(koszul_section(variables(r3), 2, 2), error);
    CHECK_THROWS_AS(koszul_section(variables(r3), 0, 4), error);
}

TEST_CASE("koszul differentials have the binomial ranks") {
    for (int n = 2; n <= 5; ++n) {
        Ring ring = ring_n(n);
        ResolutionData K = koszul_complex(variables(ring));
        for (int k = 1; k <= n; ++k)
            CHECK(matrix_rank(K.differentials[k - 1]) == binom(n - 1, k - 1));
    }
}

TEST_CASE("koszul minor ideals have full grade") {
    for (int n = 2; n <= 4; ++n) {
        Ring ring = ring_n(n);
        ResolutionData K = koszul_complex(variables(ring));
        for (const auto& d : K.differentials)
            CHECK(grade(be_ideal(d)).at_least(n));
    }
}

TEST_CASE("koszul complexes and sections are graded") {
    Ring r4 = ring_n(4);
    ResolutionData K = koszul_complex(variables(r4));
    for (const auto& d : K.differentials) {
        REQUIRE(d.source().graded());
        REQUIRE(d.target().graded());
        CHECK(d.is_graded_consistent());
    }
    ResolutionData sec = koszul_section(variables(r4), 0, 3);
    for (const auto& d : sec.differentials) {
        REQUIRE(d.source().graded());
        REQUIRE(d.target().graded());
        CHECK(d.is_graded_consistent());
    }
    // per-position generator degrees are equal (scalar-coefficient policy)
    for (const auto& d : sec.differentials) {
        const auto& degs = *d.source().degrees;
        for (int v : degs) CHECK(v == degs[0]);
    }
}

TEST_CASE("koszul input validation") {
    Ring r3 = ring_n(3);
    CHECK_THROWS_AS(koszul_complex({}), error);
    CHECK_THROWS_AS(koszul_complex({Polynomial::zero(r3)}), error);
}
