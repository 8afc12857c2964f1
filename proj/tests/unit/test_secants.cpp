#include <doctest.h>

#include "lowdeg/error.hpp"
#include "lowdeg/formulas.hpp"
#include "lowdeg/secants.hpp"

using namespace lowdeg;

namespace {

const Field Q = Field::rationals();

// Zak's list: delta_k = 0 for k <= c, delta_k <= k - c up to c+n, strictly increasing from ell2 to c+n.
void check_zak_shape(const ZakInvariants& z) {
    for (std::size_t k = 1; k <= z.c; ++k) CHECK(z.delta_at(k) == 0);
    for (std::size_t k = z.c + 1; k <= z.c + z.n; ++k) CHECK(z.delta_at(k) <= static_cast<long long>(k - z.c));
    for (std::size_t k = z.ell2; k < z.c + z.n; ++k) CHECK(z.delta_at(k) < z.delta_at(k + 1));
    for (std::size_t k = 1; k < z.s.size(); ++k) {
        CHECK(z.s[k] >= z.s[k - 1]);
        CHECK(z.s[k] <= z.s[k - 1] + z.n + 1);
    }
    CHECK(z.zak4_ok);
    CHECK(z.chain.ok);
}

}  // namespace

TEST_CASE("quadratic embeddings") {
    auto y = veronese_square(rational_normal_curve(3, Q));
    CHECK(y.coords2.size() == 10);
    CHECK(y.N == 9);
    CHECK(y.span_dim == 6);
    auto conic = veronese_square(rational_normal_curve(2, Q));
    CHECK(conic.N == 5);
    CHECK(conic.span_dim == 4);
    auto ver = veronese_square(veronese_surface(Q));
    CHECK(ver.N == 20);
    CHECK(ver.span_dim == 14);
    CHECK_THROWS_AS(veronese_square(elliptic_normal_curve(2, Field::prime(101))), Unsupported);
}

TEST_CASE("Terracini ranks") {
    auto y = veronese_square(rational_normal_curve(3, Q));
    CHECK(secant_dim(y, 0, 3, 1).dim == 1);
    CHECK(secant_dim(y, 1, 3, 1).dim == 3);
    CHECK(secant_dim(y, 2, 3, 1).dim == 5);
    auto top = secant_dim(y, 3, 3, 1, true);
    CHECK(top.dim == 6);
    CHECK(top.rational_confirmed);

    auto v = veronese_square(veronese_surface(Q));
    CHECK(secant_dim(v, 3, 3, 2).dim == 11);
    CHECK(secant_dim(v, 4, 3, 2).dim == 13);
    CHECK(secant_dim(v, 5, 3, 2).dim == 14);

    // Over a large prime field directly.
    auto big = veronese_square(rational_normal_curve(3, Field::prime(terracini_prime)));
    CHECK(secant_dim(big, 2, 2, 5).dim == 5);
    CHECK_THROWS_AS(secant_dim(veronese_square(rational_normal_curve(3, Field::prime(10007))), 1, 3, 1), DomainError);
}

TEST_CASE("Zak invariants of known varieties") {
    SUBCASE("twisted cubic") {
        auto z = zak_invariants(rational_normal_curve(3, Q), 3, 42, true);
        CHECK(z.ell2 == 2);
        CHECK(z.k2 == 3);
        CHECK(z.delta_at(3) == 1);
        CHECK(z.delta2 == 1);
        CHECK(z.s == std::vector<std::size_t>{1, 3, 5, 6});
        CHECK(z.rational_confirmed);
        CHECK(z.chain.equalities);
        check_zak_shape(z);
    }
    SUBCASE("Veronese surface") {
        auto z = zak_invariants(veronese_surface(Q), 3, 42, true);
        CHECK(z.s == std::vector<std::size_t>{2, 5, 8, 11, 13, 14});
        CHECK(z.ell2 == 3);
        CHECK(z.k2 == 5);
        CHECK(z.delta_at(4) == 1);
        CHECK(z.delta_at(5) == 2);
        CHECK(z.rational_confirmed);
        check_zak_shape(z);
    }
    SUBCASE("projected rational quartic") {
        auto q = projected_rnc(4, Q, 7);
        auto z = zak_invariants(q, 3, 42, true);
        CHECK(z.s == std::vector<std::size_t>{1, 3, 5, 7, 8});
        CHECK(z.delta_at(3) == 0);
        CHECK(z.delta_at(4) == 1);
        CHECK(z.k2 == 4);
        CHECK(z.ell2 == 3);
        CHECK(z.delta2 == 1);
        CHECK_FALSE(z.chain.equalities);
        check_zak_shape(z);
    }
    SUBCASE("rational normal curves and scrolls") {
        for (std::size_t r = 2; r <= 5; ++r) {
            auto z = zak_invariants(rational_normal_curve(r, Q));
            CHECK(z.k2 == r);
            CHECK(z.ell2 == r - 1);
            check_zak_shape(z);
        }
        auto s = zak_invariants(scroll_surface(1, 2, Q));
        CHECK(table2_row(s, Table2Row::minimal_degree).all_match);
        check_zak_shape(s);
    }
}

TEST_CASE("secant deficiency rows") {
    CHECK(table2_expected(Table2Row::minimal_degree, 3) == std::vector<long long>{1, 2, 3, 0});
    CHECK(table2_expected(Table2Row::almost_minimal_depth1, 3) == std::vector<long long>{0, 1, 2, 3});
    CHECK(table2_expected(Table2Row::almost_minimal_depth_n, 4) == std::vector<long long>{0, 1, 3, 4, 0});
    CHECK(table2_expected(Table2Row::del_pezzo, 3) == std::vector<long long>{0, 2, 3, 0});
    CHECK(table2_expected(Table2Row::acm_degree_c3, 3) == std::vector<long long>{0, 1, 3, 0});

    auto cubic = table2_row(zak_invariants(rational_normal_curve(3, Q)), Table2Row::minimal_degree);
    CHECK(cubic.all_match);
    CHECK(cubic.entries.size() == 2);
    auto quartic = table2_row(zak_invariants(projected_rnc(4, Q, 7)), Table2Row::almost_minimal_depth1);
    CHECK(quartic.all_match);
    auto mismatch = table2_row(zak_invariants(projected_rnc(4, Q, 7)), Table2Row::minimal_degree);
    CHECK_FALSE(mismatch.all_match);

    std::string j = invariant_json(zak_invariants(rational_normal_curve(3, Q)));
    CHECK(j.find("\"delta\":[0,0,1]") != std::string::npos);
    CHECK(j.find("\"zak4_ok\":true") != std::string::npos);
}
