#include <doctest.h>

#include <set>

#include "lowdeg/error.hpp"
#include "lowdeg/formulas.hpp"
#include "lowdeg/varieties.hpp"

using namespace lowdeg;

namespace {

const Field Q = Field::rationals();
const Field P = Field::prime(default_prime);
const Field P101 = Field::prime(101);


// Quadrics through X from a sampled configuration large enough to see all of X.
long long sampled_a(const ParamVariety& v, unsigned m, std::size_t count, std::uint64_t seed = 3) {
    auto pts = sample_points(v, count, seed);
    return binom(v.amb + m, m) - static_cast<long long>(hilbert(pts, m));
}

// h^1(I_C(m)) for a curve from sampled points, m*d + 1 - g - h_C(m).
long long sampled_h1(const ParamVariety& v, unsigned m) {
    auto pts = sample_points(v, m * v.d + 8, 5);
    return static_cast<long long>(m) * v.d + 1 - v.g - static_cast<long long>(hilbert(pts, m));
}

}  // namespace

TEST_CASE("rational normal curves") {
    auto c3 = rational_normal_curve(3, Q);
    CHECK(c3.d == 3);
    CHECK(c3.g == 0);
    CHECK(c3.amb == 3);
    CHECK(c3.linearly_normal);
    CHECK(coordinate_rank(c3) == 4);
    CHECK(verify_curve_degree(c3, 1).ok);

    auto conic = rational_normal_curve(2, P);
    CHECK(conic.amb == 2);
    CHECK(sampled_a(conic, 2, 10) == 1);

    auto c5 = rational_normal_curve(5, P);
    CHECK(sampled_a(c5, 2, 20) == 10);
    CHECK(F(1, 4, 2) == 10);
    CHECK_THROWS_AS(rational_normal_curve(1, Q), DomainError);
}

TEST_CASE("scrolls and the Veronese surface") {
    auto s12 = scroll_surface(1, 2, P);
    CHECK(s12.n == 2);
    CHECK(s12.amb == 4);
    CHECK(s12.d == 3);
    CHECK(sampled_a(s12, 2, 40) == F(2, 2, 2));
    CHECK(F(2, 2, 2) == 3);

    auto s13 = scroll_surface(1, 3, P);
    CHECK(s13.amb == 5);
    CHECK(sampled_a(s13, 2, 40) == F(2, 3, 2));

    auto s22 = scroll_surface(2, 2, Q);
    CHECK(s22.amb == 5);
    CHECK(s22.d == 4);
    CHECK_THROWS_AS(scroll_surface(3, 2, Q), DomainError);

    auto ver = veronese_surface(P);
    CHECK(ver.amb == 5);
    CHECK(ver.d == 4);
    CHECK(sampled_a(ver, 2, 40) == 6);
    CHECK(F(2, 3, 2) == 6);
    CHECK(span_dim(sample_points(ver, 30, 1)) == 5);
    CHECK(verify_curve_degree(section_curve(ver, 2), 3).ok);
}

TEST_CASE("scroll section curves") {
    SUBCASE("degree 2c+1 in P^{c+1}") {
        auto v = scroll_section_curve(1, 3, 5, P, 7);
        CHECK(v.d == 9);
        CHECK(v.amb == 5);
        CHECK(v.g == 0);
        CHECK(coordinate_rank(v) == 6);
        CHECK(verify_curve_degree(v, 11).ok);
    }
    SUBCASE("minimal class") {
        auto v = scroll_section_curve(1, 2, 0, P, 1);
        CHECK(v.d == 3);
        CHECK(verify_curve_degree(v, 2).ok);
    }
    SUBCASE("degree is a+b+k on every construction") {
        for (std::size_t a = 1; a <= 2; ++a)
            for (std::size_t b = a; b <= 3; ++b)
                for (std::size_t k = 1; k <= 3; ++k) {
                    auto v = scroll_section_curve(a, b, k, P, 100 * a + 10 * b + k);
                    CHECK(v.d == static_cast<int>(a + b + k));
                    CHECK(verify_curve_degree(v, 9).ok);
                    CHECK(span_dim(sample_points(v, 2 * v.amb, 4)) == v.amb);
                }
    }
    SUBCASE("genus-zero recipe") {
        // c = 4, d = c+2, k = 3: S(1,3) with class H + 2F.
        auto v = genus_zero_scroll_curve(4, 3, 6, P, 42);
        CHECK(v.d == 6);
        CHECK(v.amb == 5);
        CHECK(v.construction.name == "genus0_scroll");
        CHECK(sampled_h1(v, 1) == 1);
        CHECK(sampled_h1(v, 2) == 0);

        // (g, d) = (0, c+3) at k = 5: S(2,2) with class H + 3F.
        auto w = genus_zero_scroll_curve(4, 5, 7, P, 42);
        CHECK(w.d == 7);
        CHECK(sampled_h1(w, 1) == 2);
        CHECK(sampled_h1(w, 2) == 0);
    }
}

TEST_CASE("elliptic and genus-2 curves") {
    auto e4 = elliptic_normal_curve(2, P101);
    CHECK(e4.d == 4);
    CHECK(e4.g == 1);
    CHECK(e4.amb == 3);
    CHECK(e4.ff->basis.size() == 4);
    CHECK(verify_curve_degree(e4, 1).ok);
    CHECK(sampled_a(e4, 2, 20) == 2);
    CHECK(G(2, 1, 2, 2) == 2);

    auto e5 = elliptic_normal_curve(3, P101);
    CHECK(e5.ff->basis.size() == 5);
    CHECK(sampled_a(e5, 2, 20) == 5);

    auto h = hyperelliptic_g2_curve(3, P101);
    CHECK(h.d == 6);
    CHECK(h.g == 2);
    CHECK(h.ff->basis.size() == 5);
    CHECK(verify_curve_degree(h, 1).ok);
    CHECK(sampled_a(h, 2, 25) == 4);
    CHECK(verify_curve_degree(hyperelliptic_g2_curve(3, P), 2).ok);

    // Linearly normal curves have no h^1 at m = 1, 2.
    CHECK(sampled_h1(e5, 1) == 0);
    CHECK(sampled_h1(h, 2) == 0);

    CHECK_THROWS(elliptic_normal_curve(2, Q));
    CHECK_THROWS(elliptic_normal_curve(2, P101, {0, 0}));
    CHECK_THROWS(hyperelliptic_g2_curve(3, P101, {0, 0, 1, 0, 0, 1}));
}

TEST_CASE("sampling") {
    auto c3 = rational_normal_curve(3, Field::prime(11));
    auto pts = sample_points(c3, 12, 1);
    CHECK(pts.size() == 12);
    CHECK_THROWS_AS(sample_points(rational_normal_curve(3, Field::prime(7)), 9, 1), FieldTooSmall);
    try {
        sample_points(rational_normal_curve(3, Field::prime(7)), 9, 1);
    } catch (const FieldTooSmall& e) {
        CHECK(std::string(e.what()).find("9") != std::string::npos);
    }

    auto e4 = elliptic_normal_curve(2, P101);
    auto ep = sample_points(e4, 50, 9);
    CHECK(ep.size() == 50);
    CHECK(sample_points(e4, 50, 9) == ep);
    CHECK_FALSE(sample_points(e4, 50, 10) == ep);

    // Points really lie on the twisted cubic: x0 x2 = x1^2.
    auto q = sample_points(rational_normal_curve(3, Q), 15, 2);
    for (const auto& p : q.points()) CHECK(p[0] * p[2] == p[1] * p[1]);
}

TEST_CASE("projections") {
    auto c3 = rational_normal_curve(3, Q);
    ProjectionCenter pt(3, {Point{Scalar::from_int(Q, 1), Scalar::from_int(Q, 2), Scalar::from_int(Q, 3),
                                  Scalar::from_int(Q, 5)}});
    CHECK(pt.dim == 0);
    CHECK_THROWS_AS(project(c3, pt), DomainError);

    CHECK_THROWS_AS(ProjectionCenter(2, {Point{Scalar::one(Q), Scalar::zero(Q), Scalar::zero(Q)},
                                         Point{Scalar::from_int(Q, 2), Scalar::zero(Q), Scalar::zero(Q)}}),
                    DomainError);

    auto q4 = projected_rnc(4, P, 5);
    CHECK(q4.amb == 3);
    CHECK(q4.d == 4);
    CHECK(sampled_a(q4, 2, 20) == 1);
    CHECK(u(2, 0, 4, 2) == 1);

    // Projecting from a point on the curve drops the degree.
    auto c4 = rational_normal_curve(4, P);
    Point on(5, Scalar::one(P));
    CHECK_THROWS_AS(project(c4, ProjectionCenter(4, {on})), VerificationError);

    // Depth-one curve: h^1(I(1)) = 1.
    auto q6 = projected_rnc(6, P, 8);
    CHECK(sampled_h1(q6, 1) == 1);
    CHECK(sampled_h1(q6, 2) == 0);
}

TEST_CASE("multisecant projections") {
    struct Row {
        std::size_t c, k, g;
        long long h1, h2;
    };
    for (const Row& r : {Row{4, 3, 0, 1, 0}, Row{4, 4, 0, 2, 1}, Row{4, 4, 1, 1, 0}, Row{3, 5, 2, 1, 0}}) {
        CAPTURE(r.c);
        CAPTURE(r.k);
        CAPTURE(r.g);
        auto v = multisecant_projection(r.c, r.k, r.g, P, 42);
        CHECK(v.amb == r.c + 1);
        CHECK(v.d == static_cast<int>(r.c + r.k - 1));
        CHECK(v.g == static_cast<int>(r.g));
        CHECK(sampled_h1(v, 1) == r.h1);
        CHECK(sampled_h1(v, 2) == r.h2);
    }
    CHECK_THROWS_AS(multisecant_projection(4, 6, 3, P, 1), Unsupported);
}

TEST_CASE("descriptors rebuild deterministically") {
    std::vector<ParamVariety> vs = {rational_normal_curve(4, Q),
                                    scroll_surface(1, 2, P),
                                    veronese_surface(P),
                                    scroll_section_curve(1, 3, 2, P, 3),
                                    elliptic_normal_curve(3, P101),
                                    hyperelliptic_g2_curve(3, P101),
                                    projected_rnc(5, P, 4),
                                    multisecant_projection(4, 4, 1, P, 42),
                                    genus_zero_scroll_curve(4, 3, 6, P, 1)};
    for (const auto& v : vs) {
        CAPTURE(v.label);
        std::string j = descriptor_json(v);
        auto w = from_descriptor(j);
        CHECK(descriptor_json(w) == j);
        CHECK(w.coords == v.coords);
        CHECK(sample_points(w, 12, 1) == sample_points(v, 12, 1));
    }
    CHECK_THROWS_AS(from_descriptor("{"), FormatError);
    CHECK_THROWS_AS(from_descriptor(R"({"construction":{"name":"nope"}})"), FormatError);
}
