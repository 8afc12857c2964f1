#include <doctest.h>

#include "lowdeg/cohomology.hpp"
#include "lowdeg/error.hpp"
#include "lowdeg/formulas.hpp"

using namespace lowdeg;

namespace {

const Field P = Field::prime(default_prime);
const Field P101 = Field::prime(101);

std::vector<long long> h1_list(const DeficiencyProfile& p) {
    std::vector<long long> out;
    for (const auto& [m, h] : p.h1) out.push_back(h);
    return out;
}

}  // namespace

TEST_CASE("a_m examples") {
    CHECK(a_m(rational_normal_curve(3, Field::rationals()), 2) == 3);
    CHECK(F(1, 2, 2) == 3);
    CHECK(a_m(elliptic_normal_curve(2, P101), 2) == 2);

    auto s = a_m_detail(scroll_surface(1, 2, P), 2);
    CHECK(s.stabilized);
    CHECK(s.value == 3);
    CHECK_FALSE(a_m_detail(rational_normal_curve(4, P), 2).stabilized);

    CHECK_THROWS_AS(a_m(rational_normal_curve(3, P), 0), DomainError);
    CHECK_THROWS_AS(a_m(rational_normal_curve(6, Field::prime(11)), 2), FieldTooSmall);
}

TEST_CASE("a_m is independent of the sample seed for curves") {
    auto v = projected_rnc(5, P, 3);
    for (unsigned m = 2; m <= 4; ++m) CHECK(a_m(v, m, 1) == a_m(v, m, 99));
}

TEST_CASE("minimal degree varieties attain F") {
    for (std::size_t r = 3; r <= 5; ++r)
        for (unsigned m = 2; m <= 4; ++m) CHECK(a_m(rational_normal_curve(r, P), m) == F(1, static_cast<int>(r) - 1, m));
    for (unsigned m = 2; m <= 3; ++m) {
        CHECK(a_m(scroll_surface(1, 3, P), m) == F(2, 3, m));
        CHECK(a_m(veronese_surface(P), m) == F(2, 3, m));
    }
}

TEST_CASE("h1 of linearly normal and projected curves") {
    auto e = elliptic_normal_curve(2, P101);
    for (unsigned m = 1; m <= 3; ++m) CHECK(h1_ideal(e, m) == 0);
    auto q = projected_rnc(6, P, 1);
    CHECK(h1_ideal(q, 1) == 1);
    CHECK(h1_ideal(q, 2) == 0);
    CHECK(h1_ideal(scroll_section_curve(1, 3, 5, P, 42), 1) == 4);
    CHECK_THROWS_AS(h1_ideal(scroll_section_curve(1, 3, 6, P, 1), 1), Unsupported);
    CHECK_THROWS_AS(h1_ideal(scroll_surface(1, 2, P), 1), DomainError);
}

TEST_CASE("deficiency profiles") {
    SUBCASE("degree 2c+1 scroll curve") {
        auto p = deficiency_profile(scroll_section_curve(1, 3, 5, P, 42));
        CHECK(h1_list(p) == std::vector<long long>{4, 4, 2, 1, 0});
        CHECK(p.reg == 6);
        CHECK(p.nonzero_string() == "(4,4,2,1)");
        CHECK(verify_monotonic(p).status == CheckStatus::hypothesis_violated);
        CHECK(verify_monotonic(p).detail.find("d <= 2c") != std::string::npos);
    }
    SUBCASE("multisecant equality case") {
        auto p = deficiency_profile(multisecant_projection(4, 4, 0, P, 42));
        CHECK(p.nonzero_string() == "(2,1)");
        CHECK(p.reg == 4);
        CHECK(verify_monotonic(p).status == CheckStatus::holds);
        auto b = verify_reg_bound(p);
        CHECK(b.status == CheckStatus::holds);
        CHECK(b.equality);
    }
    SUBCASE("projected curves") {
        auto p = deficiency_profile(projected_rnc(6, P, 2));
        CHECK(p.reg == 3);
        CHECK(verify_reg_bound(p).equality);
        auto e = deficiency_profile(multisecant_projection(4, 4, 1, P, 42));
        CHECK(e.nonzero_string() == "(1)");
        CHECK(e.reg == 3);
        CHECK(verify_reg_bound(e).equality);
        CHECK(verify_reg_bound(e).status == CheckStatus::holds);
    }
    SUBCASE("zero profiles") {
        auto h = deficiency_profile(hyperelliptic_g2_curve(3, P101));
        CHECK(h.nonzero_string() == "()");
        CHECK(h.reg == 3);
        CHECK(deficiency_profile(rational_normal_curve(4, P)).reg == 2);
        CHECK(verify_monotonic(h).status == CheckStatus::hypothesis_violated);
    }
    SUBCASE("ledger identity a = u + h1") {
        for (const auto& v : {multisecant_projection(5, 5, 0, P, 1), multisecant_projection(5, 5, 2, P, 1),
                              genus_zero_scroll_curve(5, 5, 8, P, 3)}) {
            auto p = deficiency_profile(v);
            for (const auto& [m, h] : p.h1) CHECK(p.a.at(m) == p.u.at(m) + h);
            CHECK(verify_monotonic(p).status == CheckStatus::holds);
            CHECK(verify_reg_bound(p).status == CheckStatus::holds);
        }
    }
}

TEST_CASE("hypothetical profiles") {
    CHECK(verify_monotonic(profile_from_h1(4, 7, 0, {2, 1})).status == CheckStatus::holds);
    CHECK(verify_monotonic(profile_from_h1(4, 6, 0, {1})).status == CheckStatus::holds);
    auto flat = profile_from_h1(4, 8, 0, {2, 2});
    CHECK(verify_monotonic(flat).status == CheckStatus::fails);
    CHECK(verify_reg_bound(profile_from_h1(4, 6, 0, {1, 1})).status == CheckStatus::fails);
    auto wrong = profile_from_h1(4, 7, 0, {3, 1});
    CHECK(verify_reg_bound(wrong).status == CheckStatus::fails);
    CHECK(profile_csv(profile_from_h1(4, 7, 0, {2, 1})) == "m,a_m,u,h1\n1,0,-2,2\n2,7,6,1\n3,34,34,0\n");
}

TEST_CASE("classification by a_2") {
    auto rnc = classify_a2_curve(rational_normal_curve(3, P));
    CHECK(rnc.k == 1);
    CHECK(rnc.case_name == "rational normal curve");
    CHECK(rnc.identity_holds);

    auto ell = classify_a2_curve(elliptic_normal_curve(3, P101));
    CHECK(ell.k == 2);
    CHECK(ell.case_name == "linearly normal curve of arithmetic genus one");

    auto prj = classify_a2_curve(projected_rnc(6, P, 5));
    CHECK(prj.k == 3);
    CHECK(prj.case_name.find("projection of a rational normal curve") != std::string::npos);
    CHECK(prj.identity_holds);

    auto g2 = classify_a2_curve(hyperelliptic_g2_curve(3, P101));
    CHECK(g2.k == 3);
    CHECK(g2.case_name == "linearly normal curve of arithmetic genus two");

    auto four = classify_a2_curve(multisecant_projection(4, 4, 0, P, 42));
    CHECK(four.k == 4);
    CHECK(four.h1_2 == 1);
    CHECK(four.identity_holds);
    auto four_e = classify_a2_curve(multisecant_projection(4, 4, 1, P, 42));
    CHECK(four_e.k == 4);
    CHECK(four_e.case_name.find("genus-one") != std::string::npos);

    CHECK_THROWS_AS(classify_a2_curve(scroll_section_curve(1, 3, 5, P, 42)), DomainError);
}

TEST_CASE("H_k bounds and the section inequality") {
    auto q = projected_rnc(4, P, 5);
    auto b = bound_check(q, 2, 2);
    CHECK(b.a == 1);
    CHECK(b.bound == 2);
    CHECK(b.holds);
    auto minimal = bound_check(rational_normal_curve(4, P), 3, 1);
    CHECK(minimal.equality);
    CHECK(bound_check(scroll_surface(1, 2, P), 2, 1).equality);
    CHECK(bound_check(scroll_section_curve(1, 3, 5, P, 42), 2, 5).holds);
    CHECK_THROWS_AS(bound_check(rational_normal_curve(4, P), 2, 2), DomainError);

    for (const auto& v : {rational_normal_curve(4, P), projected_rnc(5, P, 1), scroll_section_curve(1, 3, 5, P, 42)}) {
        auto s = section_check(v);
        CHECK(s.holds);
    }
    auto rn = section_check(rational_normal_curve(4, P));
    CHECK(rn.a2 == rn.section_a2);
    CHECK(section_check(elliptic_normal_curve(3, P101)).holds);
    CHECK(section_check(scroll_surface(1, 2, P)).holds);
    auto ver = section_check(veronese_surface(P));
    CHECK(ver.holds);
    CHECK(ver.section_a2 == 6);
}
