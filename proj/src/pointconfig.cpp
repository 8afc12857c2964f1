#include "lowdeg/pointconfig.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "lowdeg/error.hpp"
#include "lowdeg/formulas.hpp"
#include "lowdeg/matrix.hpp"
#include "lowdeg/mpoly.hpp"

namespace lowdeg {

Point normalize_point(Point p) {
    auto it = std::find_if(p.begin(), p.end(), [](const Scalar& x) { return !x.is_zero(); });
    if (it == p.end()) throw DomainError("zero vector is not a projective point");
    const Scalar inv = it->inverse();
    for (auto& x : p) x *= inv;
    return p;
}

PointConfig::PointConfig(const Field& f, std::size_t c, std::vector<Point> points) : field_(f), c_(c) {
    std::set<Point> seen;
    points_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != c + 1)
            throw DomainError("point " + std::to_string(i) + " has " + std::to_string(points[i].size()) +
                              " coordinates, expected " + std::to_string(c + 1));
        for (const auto& x : points[i])
            if (!(x.field() == f)) throw FieldMismatch("point coordinate in " + x.field().to_string());
        Point p = normalize_point(std::move(points[i]));
        if (!seen.insert(p).second) throw DomainError("point " + std::to_string(i) + " repeats an earlier point");
        points_.push_back(std::move(p));
    }
}

PointConfig PointConfig::from_integers(const Field& f, std::size_t c, const std::vector<std::vector<long long>>& pts) {
    std::vector<Point> v;
    for (const auto& r : pts) {
        Point p;
        for (long long x : r) p.push_back(Scalar::from_int(f, x));
        v.push_back(std::move(p));
    }
    return PointConfig(f, c, std::move(v));
}

PointConfig PointConfig::coordinate_points(const Field& f, std::size_t c) {
    std::vector<Point> v;
    for (std::size_t i = 0; i <= c; ++i) {
        Point p(c + 1, Scalar::zero(f));
        p[i] = Scalar::one(f);
        v.push_back(std::move(p));
    }
    return PointConfig(f, c, std::move(v));
}

PointConfig PointConfig::subset(const std::vector<std::size_t>& indices) const {
    std::vector<Point> v;
    for (auto i : indices) v.push_back(points_.at(i));
    return PointConfig(field_, c_, std::move(v));
}

PointConfig PointConfig::without(std::size_t index) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < size(); ++i)
        if (i != index) idx.push_back(i);
    return subset(idx);
}

std::size_t span_dim(const PointConfig& g) {
    if (g.size() == 0) throw DomainError("span of an empty configuration");
    std::vector<Scalar> e;
    for (const auto& p : g.points()) e.insert(e.end(), p.begin(), p.end());
    return rank(Matrix(g.field(), g.size(), g.c() + 1, std::move(e))) - 1;
}

std::vector<Scalar> monomial_row(const Point& p, const std::vector<Exponent>& mons) {
    unsigned m = 0;
    for (const auto& mon : mons)
        for (unsigned x : mon) m = std::max(m, x);
    const Field& f = p.front().field();
    // power table p[i]^k
    std::vector<std::vector<Scalar>> pw(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        pw[i].push_back(Scalar::one(f));
        for (unsigned k = 1; k <= m; ++k) pw[i].push_back(pw[i].back() * p[i]);
    }
    std::vector<Scalar> row;
    row.reserve(mons.size());
    for (const auto& mon : mons) {
        Scalar v = Scalar::one(f);
        for (std::size_t i = 0; i < mon.size(); ++i)
            if (mon[i]) v *= pw[i][mon[i]];
        row.push_back(std::move(v));
    }
    return row;
}

std::size_t hilbert(const PointConfig& g, unsigned m) {
    if (g.size() == 0) return 0;
    const auto mons = monomials(g.c() + 1, m);
    std::vector<Scalar> e;
    e.reserve(g.size() * mons.size());
    for (const auto& p : g.points()) {
        auto row = monomial_row(p, mons);
        e.insert(e.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
    }
    return rank(Matrix(g.field(), g.size(), mons.size(), std::move(e)));
}

std::size_t h0_ideal(const PointConfig& g, unsigned m) {
    return static_cast<std::size_t>(binom(g.c() + m, m)) - hilbert(g, m);
}

std::size_t regularity(const PointConfig& g) {
    if (g.size() == 0) throw DomainError("regularity of an empty configuration");
    // h(m) is nondecreasing and reaches |g| by m = |g| - 1
    for (unsigned r = 1;; ++r)
        if (hilbert(g, r - 1) == g.size()) return r;
}

namespace {

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order; stops when fn returns false.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!fn(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool certified(const PointConfig& g, const std::vector<std::size_t>& idx) {
    PointConfig s = g.subset(idx);
    return span_dim(s) == g.c() && hilbert(s, 2) == s.size();
}

}  // namespace

NuVector nu_vector(const PointConfig& g, std::size_t cap) {
    if (g.size() > cap)
        throw ComplexityRefusal("nu_vector enumerates subsets and is capped at " + std::to_string(cap) + " points, got " +
                                std::to_string(g.size()));
    NuVector nu;
    const std::size_t top = std::min(g.c(), span_dim(g));
    for (std::size_t i = 0; i < top; ++i) {
        std::optional<std::size_t> lo, hi;
        for_each_subset(g.size(), i + 1, [&](const std::vector<std::size_t>& idx) {
            EchelonBasis eb(g.field(), g.c() + 1);
            for (auto j : idx)
                if (!eb.add(g.point(j))) return true;  // dependent subset
            std::size_t count = 0;
            for (const auto& q : g.points())
                if (eb.contains(q)) ++count;
            lo = lo ? std::min(*lo, count) : count;
            hi = hi ? std::max(*hi, count) : count;
            return true;
        });
        if (!lo) break;
        nu.values.push_back(*lo);
        if (*lo != *hi) nu.semi_uniform = false;
    }
    return nu;
}

ThreeRegularSubset extract_three_regular(const PointConfig& g, const ExtractOptions& opt) {
    const std::size_t c = g.c();
    const std::size_t want = 2 * c + 1;
    if (g.size() < want)
        throw DomainError("need at least 2c+1 = " + std::to_string(want) + " points, got " + std::to_string(g.size()));
    if (span_dim(g) != c) throw DomainError("points do not span P^" + std::to_string(c));

    ThreeRegularSubset out{g, {}, 0, "", 0, std::nullopt};
    if (g.size() <= opt.nu_cap) out.semi_uniform = nu_vector(g, opt.nu_cap).semi_uniform;

    auto accept = [&](std::vector<std::size_t> idx, const char* phase) {
        ++out.candidates_tried;
        std::sort(idx.begin(), idx.end());
        if (!certified(g, idx)) return false;
        out.points = g.subset(idx);
        out.indices = std::move(idx);
        out.regularity = regularity(out.points);
        out.phase = phase;
        if (out.regularity > 3) throw VerificationError("certified subset has regularity " + std::to_string(out.regularity));
        return true;
    };

    // greedy spanning basis, first points by index
    std::vector<std::size_t> basis, rest;
    EchelonBasis eb(g.field(), c + 1);
    for (std::size_t i = 0; i < g.size(); ++i) (eb.rank() <= c && eb.add(g.point(i)) ? basis : rest).push_back(i);

    std::vector<std::size_t> cand = basis;
    cand.insert(cand.end(), rest.begin(), rest.begin() + c);
    if (accept(cand, "spanning-greedy")) return out;

    // move the basis to the coordinate frame and prefer points of small support
    {
        std::vector<std::vector<Scalar>> rows;
        for (auto i : basis) rows.push_back(g.point(i));
        Matrix binv = inverse(Matrix::from_rows(g.field(), rows, c + 1));
        Matrix bt = binv.transpose();
        std::vector<std::pair<std::size_t, std::size_t>> ranked;
        for (auto i : rest) {
            auto coords = bt.apply(g.point(i));
            std::size_t support = std::count_if(coords.begin(), coords.end(), [](const Scalar& x) { return !x.is_zero(); });
            ranked.emplace_back(support, i);
        }
        std::sort(ranked.begin(), ranked.end());
        cand = basis;
        for (std::size_t j = 0; j < c; ++j) cand.push_back(ranked[j].second);
        if (accept(cand, "coordinate-frame")) return out;
    }

    bool found = false;
    std::size_t examined = 0;
    for_each_subset(g.size(), want, [&](const std::vector<std::size_t>& idx) {
        if (examined++ >= opt.budget) return false;
        found = accept(idx, "exhaustive");
        return !found;
    });
    if (found) return out;

    std::string why = out.semi_uniform == std::optional<bool>(false) ? " (input is not in linear semi-uniform position)" : "";
    throw ConstructionError("no spanning 3-regular subset of " + std::to_string(want) + " points found after " +
                            std::to_string(out.candidates_tried) + " candidates" + why);
}

bool separates_point(const PointConfig& g, std::size_t index, unsigned m) {
    if (index >= g.size()) throw DomainError("point index out of range");
    if (m < 1) throw DomainError("separates_point needs m >= 1");
    return hilbert(g, m) > hilbert(g.without(index), m);
}

namespace {

std::string next_content_line(std::istream& in, std::size_t& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos) return line;
    }
    throw FormatError("unexpected end of point file after line " + std::to_string(lineno));
}

}  // namespace

PointConfig read_points(std::istream& in) {
    std::size_t lineno = 0;
    std::istringstream l1(next_content_line(in, lineno));
    std::string kw, fs;
    if (!(l1 >> kw >> fs) || kw != "field") throw FormatError("line 1: expected 'field <p>' or 'field Q'");
    Field f = Field::rationals();
    if (fs != "Q") {
        try {
            std::size_t pos = 0;
            unsigned long long p = std::stoull(fs, &pos);
            if (pos != fs.size()) throw FormatError("line 1: bad field '" + fs + "'");
            f = Field::prime(p);
        } catch (const std::logic_error&) {
            throw FormatError("line 1: bad field '" + fs + "'");
        } catch (const DomainError& e) {
            throw FormatError(std::string("line 1: ") + e.what());
        }
    }
    std::istringstream l2(next_content_line(in, lineno));
    long long c = -1, n = -1;
    if (!(l2 >> c >> n) || c < 1 || n < 0) throw FormatError("line 2: expected '<c> <npoints>' with c >= 1");
    std::vector<Point> pts;
    for (long long i = 0; i < n; ++i) {
        std::istringstream ls(next_content_line(in, lineno));
        Point p;
        std::string tok;
        while (ls >> tok) {
            mpz_class v;
            if (v.set_str(tok, 10) != 0) throw FormatError("line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
            p.push_back(Scalar::from_mpz(f, v));
        }
        if (p.size() != static_cast<std::size_t>(c + 1))
            throw FormatError("line " + std::to_string(lineno) + ": expected " + std::to_string(c + 1) + " coordinates");
        pts.push_back(std::move(p));
    }
    try {
        return PointConfig(f, static_cast<std::size_t>(c), std::move(pts));
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
}

PointConfig read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open point file '" + path + "'");
    return read_points(in);
}

void write_points(std::ostream& out, const PointConfig& g) {
    out << "field " << (g.field().is_rational() ? std::string("Q") : std::to_string(g.field().modulus())) << "\n";
    out << g.c() << " " << g.size() << "\n";
    for (const auto& p : g.points()) {
        if (g.field().is_prime()) {
            for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i].residue();
        } else {
            // primitive integer representative; the first nonzero entry stays positive
            mpz_class l = 1;
            for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.rational().get_den_mpz_t());
            std::vector<mpz_class> v;
            mpz_class gc = 0;
            for (const auto& x : p) {
                v.push_back(x.rational().get_num() * (l / x.rational().get_den()));
                mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), v.back().get_mpz_t());
            }
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << mpz_class(v[i] / gc).get_str();
        }
        out << "\n";
    }
}

}  // namespace lowdeg
