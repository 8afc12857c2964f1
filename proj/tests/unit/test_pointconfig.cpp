#include <doctest.h>

#include <sstream>

#include "lowdeg/error.hpp"
#include "lowdeg/formulas.hpp"
#include "lowdeg/pointconfig.hpp"
#include "lowdeg/rng.hpp"

using namespace lowdeg;

namespace {

const Field Q = Field::rationals();
const Field P = Field::prime(10007);

std::vector<std::vector<long long>> rnc_points(std::size_t c, std::vector<long long> ts) {
    std::vector<std::vector<long long>> out;
    for (long long t : ts) {
        std::vector<long long> p;
        long long v = 1;
        for (std::size_t i = 0; i <= c; ++i, v *= t) p.push_back(v);
        out.push_back(p);
    }
    return out;
}

// Points of the rational normal curve in P^{c+1} sent to P^c by a random integer linear map.
PointConfig projected_rnc(std::size_t c, std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<long long>> a(c + 1, std::vector<long long>(c + 2));
    for (auto& r : a)
        for (auto& x : r) x = rng.uniform(-5, 5);
    std::vector<long long> ts;
    for (std::size_t i = 0; i < count; ++i) ts.push_back(static_cast<long long>(i) + 2);
    std::vector<std::vector<long long>> pts;
    for (const auto& q : rnc_points(c + 1, ts)) {
        std::vector<long long> p(c + 1, 0);
        for (std::size_t i = 0; i <= c; ++i)
            for (std::size_t j = 0; j <= c + 1; ++j) p[i] += a[i][j] * q[j];
        pts.push_back(p);
    }
    return PointConfig::from_integers(P, c, pts);
}

}  // namespace

TEST_CASE("construction normalizes and rejects degenerate input") {
    auto g = PointConfig::from_integers(Q, 1, {{2, 4}, {0, 3}});
    CHECK(g.point(0)[1] == Scalar::from_int(Q, 2));
    CHECK(g.point(1)[1].is_one());
    CHECK_THROWS_AS(PointConfig::from_integers(Q, 1, {{1, 2}, {2, 4}}), DomainError);
    CHECK_THROWS_AS(PointConfig::from_integers(Q, 1, {{0, 0}}), DomainError);
    CHECK_THROWS_AS(PointConfig::from_integers(Q, 2, {{1, 2}}), DomainError);
}

TEST_CASE("span_dim") {
    CHECK(span_dim(PointConfig::coordinate_points(Q, 3)) == 3);
    CHECK(span_dim(PointConfig::from_integers(Q, 3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {1, 2, 0, 0}, {1, 3, 0, 0}})) == 1);
    CHECK(span_dim(PointConfig::from_integers(Q, 3, rnc_points(3, {1, 2, 3, 4, 5, 6, 7}))) == 3);
}

TEST_CASE("hilbert function") {
    auto e = PointConfig::coordinate_points(Q, 2);
    CHECK(hilbert(e, 2) == 3);
    CHECK(h0_ideal(e, 2) == 3);
    CHECK(hilbert(e, 0) == 1);
    // five points on the conic xz = y^2
    auto conic = PointConfig::from_integers(Q, 2, rnc_points(2, {1, 2, 3, 4, 5}));
    CHECK(hilbert(conic, 2) == 5);
    CHECK(h0_ideal(conic, 2) == 1);
    for (std::size_t c = 2; c <= 5; ++c) CHECK(h0_ideal(PointConfig::coordinate_points(Q, c), 2) == binom(c + 2, 2) - (c + 1));
}

TEST_CASE("points in linearly general position impose independent quadric conditions") {
    for (std::size_t c = 2; c <= 4; ++c) {
        std::vector<long long> ts;
        for (std::size_t i = 0; i < 2 * c + 1; ++i) ts.push_back(static_cast<long long>(i) + 1);
        auto g = PointConfig::from_integers(P, c, rnc_points(c, ts));
        CHECK(h0_ideal(g, 2) == binom(c + 2, 2) - (2 * c + 1));
        // more points on the same curve keep the bound
        ts.push_back(40);
        ts.push_back(41);
        auto big = PointConfig::from_integers(P, c, rnc_points(c, ts));
        CHECK(h0_ideal(big, 2) <= binom(c + 2, 2) - (2 * c + 1));
    }
}

TEST_CASE("regularity") {
    CHECK(regularity(PointConfig::coordinate_points(Q, 3)) == 2);
    auto g = PointConfig::from_integers(Q, 3, rnc_points(3, {1, 2, 3, 4, 5, 6, 7}));
    CHECK(regularity(g) == 3);
    // d+1 collinear points: univariate Vandermonde reaches full rank in degree d
    for (long long d = 1; d <= 5; ++d) {
        std::vector<std::vector<long long>> pts;
        for (long long t = 0; t <= d; ++t) pts.push_back({1, t, 0});
        CHECK(regularity(PointConfig::from_integers(Q, 2, pts)) == static_cast<std::size_t>(d + 1));
    }
    auto four = PointConfig::from_integers(Q, 2, {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}});
    CHECK(regularity(four) == 4);
}

TEST_CASE("hilbert is nondecreasing and stabilizes at the point count") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t c = 2 + rng.below(2);
        std::vector<std::vector<long long>> pts;
        std::size_t n = 3 + rng.below(6);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<long long> p(c + 1);
            for (auto& x : p) x = rng.uniform(-3, 3);
            if (std::all_of(p.begin(), p.end(), [](long long x) { return x == 0; })) p[0] = 1;
            pts.push_back(p);
        }
        std::vector<Point> uniq;
        for (auto& p : pts) {
            std::vector<Scalar> s;
            for (auto x : p) s.push_back(Scalar::from_int(Q, x));
            auto np = normalize_point(s);
            if (std::find(uniq.begin(), uniq.end(), np) == uniq.end()) uniq.push_back(np);
        }
        PointConfig g(Q, c, uniq);
        std::size_t reg = regularity(g);
        for (unsigned m = 1; m < reg + 2; ++m) CHECK(hilbert(g, m) >= hilbert(g, m - 1));
        for (unsigned m = static_cast<unsigned>(reg) - 1; m < reg + 2; ++m) CHECK(hilbert(g, m) == g.size());
        bool all_sep = true;
        for (std::size_t i = 0; i < g.size(); ++i) all_sep = all_sep && separates_point(g, i, 2);
        CHECK(all_sep == (reg <= 3));
    }
}

TEST_CASE("nu vector") {
    auto g = PointConfig::from_integers(P, 3, rnc_points(3, {1, 2, 3, 4, 5, 6, 7}));
    auto nu = nu_vector(g);
    CHECK(nu.semi_uniform);
    CHECK(nu.values == std::vector<std::size_t>{1, 2, 3});
    auto bad = PointConfig::from_integers(Q, 2, {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {0, 0, 1}});
    CHECK_FALSE(nu_vector(bad).semi_uniform);
    auto e = nu_vector(PointConfig::coordinate_points(Q, 3));
    CHECK(e.semi_uniform);
    CHECK(e.values == std::vector<std::size_t>{1, 2, 3});
    std::vector<long long> ts;
    for (long long t = 1; t <= 17; ++t) ts.push_back(t);
    auto big = PointConfig::from_integers(P, 2, rnc_points(2, ts));
    CHECK_THROWS_AS(nu_vector(big), ComplexityRefusal);
    CHECK_NOTHROW(nu_vector(big, 17));
}

TEST_CASE("semi-uniform small configurations are in general position") {
    Rng rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t c = 2 + rng.below(2);
        std::size_t n = c + 1 + rng.below(c);
        auto g = projected_rnc(c, n, 100 + trial);
        if (span_dim(g) != c) continue;
        auto nu = nu_vector(g);
        if (!nu.semi_uniform) continue;
        for (std::size_t i = 0; i < nu.values.size(); ++i) CHECK(nu.values[i] == i + 1);
    }
}

TEST_CASE("coordinate points keep quadric count below C(c+1,2)") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t c = 2 + rng.below(3);
        auto base = PointConfig::coordinate_points(P, c);
        std::vector<Point> pts = base.points();
        for (int i = 0; i < 3; ++i) {
            Point p;
            for (std::size_t j = 0; j <= c; ++j) p.push_back(Scalar::from_int(P, rng.uniform(1, 50)));
            pts.push_back(p);
        }
        CHECK(h0_ideal(PointConfig(P, c, pts), 2) <= binom(c + 1, 2));
    }
}

TEST_CASE("extract_three_regular") {
    // nine points on a conic, c = 2
    std::vector<long long> ts{1, 2, 3, 4, 5, 6, 7, 8, 9};
    auto g = PointConfig::from_integers(P, 2, rnc_points(2, ts));
    auto r = extract_three_regular(g);
    CHECK(r.points.size() == 5);
    CHECK(r.regularity <= 3);
    CHECK(span_dim(r.points) == 2);

    // 2c+1 points in general position come back unchanged
    auto lgp = PointConfig::from_integers(P, 3, rnc_points(3, {1, 2, 3, 4, 5, 6, 7}));
    auto r2 = extract_three_regular(lgp);
    CHECK(r2.points == lgp);
    CHECK(r2.semi_uniform == true);

    auto proj = projected_rnc(3, 8, 77);
    auto r3 = extract_three_regular(proj);
    CHECK(r3.points.size() == 7);
    CHECK(regularity(r3.points) <= 3);

    CHECK_THROWS_AS(extract_three_regular(PointConfig::coordinate_points(P, 2)), DomainError);
}

TEST_CASE("extraction skips a bad leading block") {
    // the first points (by index) lie on a line, so the greedy candidate fails
    auto g = PointConfig::from_integers(Q, 2, {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {0, 0, 1}, {1, 5, 7}, {1, 9, 4}});
    auto r = extract_three_regular(g);
    CHECK(r.regularity <= 3);
    CHECK(span_dim(r.points) == 2);
    CHECK(hilbert(r.points, 2) == 5);
    CHECK(r.semi_uniform == false);
}

TEST_CASE("separates_point") {
    auto e = PointConfig::coordinate_points(Q, 2);
    for (std::size_t i = 0; i < 3; ++i) CHECK(separates_point(e, i, 1));
    auto line = PointConfig::from_integers(Q, 2, {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}});
    CHECK_FALSE(separates_point(line, 1, 2));
    auto lgp = PointConfig::from_integers(P, 3, rnc_points(3, {1, 2, 3, 4, 5, 6, 7}));
    for (std::size_t i = 0; i < lgp.size(); ++i) CHECK(separates_point(lgp, i, 2));
}

TEST_CASE("point file round trip") {
    auto g = PointConfig::from_integers(Q, 2, {{3, 6, -9}, {0, 2, 5}, {7, 1, 1}});
    std::ostringstream os;
    write_points(os, g);
    CHECK(os.str() == "field Q\n2 3\n1 2 -3\n0 2 5\n7 1 1\n");
    std::istringstream is(os.str());
    auto back = read_points(is);
    CHECK(back == g);
    std::ostringstream os2;
    write_points(os2, back);
    CHECK(os2.str() == os.str());

    auto gp = PointConfig::from_integers(P, 2, {{3, 6, -9}, {0, 2, 5}});
    std::ostringstream op;
    write_points(op, gp);
    std::istringstream ip(op.str());
    CHECK(read_points(ip) == gp);
}

TEST_CASE("point file errors") {
    auto parse = [](const std::string& s) {
        std::istringstream is(s);
        return read_points(is);
    };
    CHECK_THROWS_AS(parse("fld 7\n1 1\n1 0\n"), FormatError);
    CHECK_THROWS_AS(parse("field 8\n1 1\n1 0\n"), FormatError);
    CHECK_THROWS_AS(parse("field 7\n1 2\n1 0\n"), FormatError);
    CHECK_THROWS_AS(parse("field 7\n1 1\n1 0 3\n"), FormatError);
    CHECK_THROWS_AS(parse("field Q\n1 2\n1 0\n2 0\n"), FormatError);
    CHECK_THROWS_AS(parse("field Q\n1 1\n1 x\n"), FormatError);
    CHECK(parse("field 7\n1 1\n-1 3\n").point(0)[1].residue() == 4);
}

TEST_CASE("point files with comments") {
    std::istringstream in("# four points\nfield 10007   # prime\n\n3 4\n1 0 0 0  # e0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
    auto g = lowdeg::read_points(in);
    CHECK(g.size() == 4);
    CHECK(lowdeg::regularity(g) == 2);
}
