#include "lowdeg/varieties.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "lowdeg/error.hpp"
#include "lowdeg/formulas.hpp"
#include "lowdeg/rng.hpp"

namespace lowdeg {

using json = nlohmann::json;

namespace {

constexpr int retry_budget = 8;

Scalar random_scalar(Rng& rng, const Field& f) {
    if (f.is_prime()) return Scalar::residue(f, rng.below(f.modulus()));
    return Scalar::from_int(f, rng.uniform(-1000, 1000));
}

Scalar random_nonzero(Rng& rng, const Field& f) {
    while (true) {
        Scalar s = random_scalar(rng, f);
        if (!s.is_zero()) return s;
    }
}

// Random binary form of the given degree in variables (s,t) of a 2-variable ring.
MPoly random_binary_form(Rng& rng, const Field& f, std::size_t deg) {
    MPoly p(f, 2);
    for (std::size_t i = 0; i <= deg; ++i) p.add_term({static_cast<unsigned>(deg - i), static_cast<unsigned>(i)}, random_scalar(rng, f));
    return p;
}

// f(1, t) for a binary form f(s, t).
UPoly dehomogenize(const MPoly& f) {
    std::vector<Scalar> c;
    for (const auto& [e, v] : f.terms()) {
        if (c.size() <= e[1]) c.resize(e[1] + 1, Scalar::zero(f.field()));
        c[e[1]] += v;
    }
    return UPoly(f.field(), std::move(c));
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (modp::pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return modp::pow(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    std::uint64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (modp::pow(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s, c = modp::pow(z, q, p), t = modp::pow(a, q, p), r = modp::pow(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = modp::mul(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = modp::mul(b, b, p);
        m = i;
        c = modp::mul(b, b, p);
        t = modp::mul(t, c, p);
        r = modp::mul(r, b, p);
    }
    return r;
}

std::vector<long long> integer_representative(const Point& p) {
    std::vector<long long> out;
    if (!p.empty() && p[0].field().is_prime()) {
        for (const auto& x : p) out.push_back(static_cast<long long>(x.residue()));
        return out;
    }
    mpz_class l = 1, g = 0;
    for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.rational().get_den_mpz_t());
    std::vector<mpz_class> v;
    for (const auto& x : p) {
        v.push_back(x.rational().get_num() * (l / x.rational().get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
    }
    for (auto& x : v) {
        x /= g;
        if (!x.fits_slong_p()) throw DomainError("center coordinate too large for a descriptor");
        out.push_back(x.get_si());
    }
    return out;
}

Point basis_values(const FunctionFieldCurve& ff, const Scalar& x, const Scalar& y) {
    Point v;
    for (auto [i, j] : ff.basis) v.push_back(x.pow(i) * y.pow(j));
    return v;
}

ParamVariety function_field_curve(const Field& f, UPoly poly, int genus, std::size_t d, const std::string& label) {
    FunctionFieldCurve ff{std::move(poly), {}, Matrix(f, 0, 0)};
    const unsigned y_pole = genus == 1 ? 3 : 5;
    for (unsigned i = 0; 2 * i <= d; ++i) ff.basis.emplace_back(i, 0);
    for (unsigned i = 0; 2 * i + y_pole <= d; ++i) ff.basis.emplace_back(i, 1);
    ff.coeffs = Matrix::identity(f, ff.basis.size());
    ParamVariety v;
    v.n = 1;
    v.amb = ff.basis.size() - 1;
    v.d = static_cast<int>(d);
    v.g = genus;
    v.label = label;
    v.linearly_normal = true;
    v.field = f;
    v.ff = std::move(ff);
    return v;
}

void require_prime_field(const Field& f, const char* what) {
    if (!f.is_prime()) throw DomainError(std::string(what) + " needs a prime field");
    if (f.modulus() <= 3) throw DomainError(std::string(what) + " needs p > 3");
}

std::vector<std::size_t> fiber_generators_pivot(const Point& v) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) idx.push_back(i);
    return idx;
}

bool proportional(const Point& a, const Point& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    return true;
}

}  // namespace

std::size_t ParamVariety::nparams() const {
    if (ff) return 2;
    std::size_t s = 0;
    for (auto b : blocks) s += b;
    return s;
}

ProjectionCenter::ProjectionCenter(std::size_t amb, std::vector<Point> b) : ambient(amb), basis(std::move(b)), dim(0) {
    if (basis.empty()) throw DomainError("projection center needs at least one point");
    EchelonBasis eb(basis[0][0].field(), amb + 1);
    for (const auto& p : basis) {
        if (p.size() != amb + 1) throw DomainError("projection center point has the wrong length");
        if (!eb.add(p)) throw DomainError("projection center basis is linearly dependent");
    }
    dim = basis.size() - 1;
}

ParamVariety rational_normal_curve(std::size_t r, const Field& f) {
    if (r < 2) throw DomainError("rational normal curve needs r >= 2");
    ParamVariety v;
    v.n = 1;
    v.amb = r;
    v.d = static_cast<int>(r);
    v.g = 0;
    v.label = "RNC(" + std::to_string(r) + ")";
    v.linearly_normal = true;
    v.field = f;
    v.blocks = {2};
    for (std::size_t i = 0; i <= r; ++i)
        v.coords.push_back(MPoly::monomial(f, {static_cast<unsigned>(r - i), static_cast<unsigned>(i)}, Scalar::one(f)));
    v.construction = {"rnc", {{"r", static_cast<long long>(r)}}, {}, {}};
    return v;
}

ParamVariety scroll_surface(std::size_t a, std::size_t b, const Field& f) {
    if (a < 1 || a > b) throw DomainError("scroll S(a,b) needs 1 <= a <= b");
    ParamVariety v;
    v.n = 2;
    v.amb = a + b + 1;
    v.d = static_cast<int>(a + b);
    v.label = "S(" + std::to_string(a) + "," + std::to_string(b) + ")";
    v.linearly_normal = true;
    v.field = f;
    v.blocks = {2, 2};
    const Scalar one = Scalar::one(f);
    for (unsigned i = 0; i <= a; ++i) v.coords.push_back(MPoly::monomial(f, {static_cast<unsigned>(a) - i, i, 1, 0}, one));
    for (unsigned j = 0; j <= b; ++j) v.coords.push_back(MPoly::monomial(f, {static_cast<unsigned>(b) - j, j, 0, 1}, one));
    v.construction = {"scroll", {{"a", static_cast<long long>(a)}, {"b", static_cast<long long>(b)}}, {}, {}};
    return v;
}

ParamVariety veronese_surface(const Field& f) {
    ParamVariety v;
    v.n = 2;
    v.amb = 5;
    v.d = 4;
    v.label = "Veronese surface";
    v.linearly_normal = true;
    v.field = f;
    v.blocks = {3};
    for (const auto& e : monomials(3, 2)) v.coords.push_back(MPoly::monomial(f, e, Scalar::one(f)));
    v.construction = {"veronese", {}, {}, {}};
    return v;
}

ParamVariety scroll_section_curve(std::size_t a, std::size_t b, std::size_t k, const Field& f, std::uint64_t seed) {
    if (a < 1 || b < 1) throw DomainError("scroll section curve needs a, b >= 1");
    const ParamVariety s = scroll_surface(std::min(a, b), std::max(a, b), f);
    // a <= b in the scroll's own coordinates; the fiber degrees follow the ordered pair
    const std::size_t lo = std::min(a, b), hi = std::max(a, b);
    std::string last;
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        MPoly beta = random_binary_form(rng, f, hi + k), alpha = random_binary_form(rng, f, lo + k);
        UPoly db = dehomogenize(beta), da = dehomogenize(alpha);
        if (db.is_zero() || da.is_zero()) continue;
        const bool infinity_common = db.degree() < static_cast<int>(hi + k) && da.degree() < static_cast<int>(lo + k);
        if (gcd(db, da).degree() > 0 || infinity_common) {
            last = "fiber forms share a root";
            continue;
        }
        ParamVariety v;
        v.n = 1;
        v.amb = s.amb;
        v.d = static_cast<int>(lo + hi + k);
        v.g = 0;
        v.label = "H+" + std::to_string(k) + "F on S(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
        v.field = f;
        v.blocks = {2};
        const MPoly sv = MPoly::variable(f, 2, 0), tv = MPoly::variable(f, 2, 1);
        for (const auto& cpoly : s.coords) v.coords.push_back(cpoly.compose({sv, tv, beta, alpha}));
        v.linearly_normal = false;
        v.construction = {"scroll_section",
                          {{"a", static_cast<long long>(a)}, {"b", static_cast<long long>(b)}, {"k", static_cast<long long>(k)},
                           {"seed", static_cast<long long>(seed)}},
                          {},
                          {}};
        // Class H is a hyperplane section and spans only a hyperplane.
        const std::size_t want = k == 0 ? v.amb : v.amb + 1;
        if (coordinate_rank(v) != want) {
            last = "coordinate rank " + std::to_string(coordinate_rank(v)) + " != " + std::to_string(want);
            continue;
        }
        auto dc = verify_curve_degree(v, derive_seed(seed, 1000 + attempt));
        if (!dc.ok) {
            last = dc.detail;
            continue;
        }
        return v;
    }
    throw ConstructionError("scroll section curve H+" + std::to_string(k) + "F on S(" + std::to_string(lo) + "," +
                            std::to_string(hi) + ") failed after " + std::to_string(retry_budget) + " attempts: " + last);
}

ParamVariety elliptic_normal_curve(std::size_t c, const Field& f, std::pair<long long, long long> ab) {
    require_prime_field(f, "elliptic normal curve");
    if (c < 1) throw DomainError("elliptic normal curve needs c >= 1");
    const Scalar A = Scalar::from_int(f, ab.first), B = Scalar::from_int(f, ab.second);
    const Scalar disc = Scalar::from_int(f, 4) * A.pow(3) + Scalar::from_int(f, 27) * B.pow(2);
    if (disc.is_zero()) throw DomainError("y^2 = x^3 + Ax + B is singular over " + f.to_string());
    UPoly poly(f, {B, A, Scalar::zero(f), Scalar::one(f)});
    auto v = function_field_curve(f, poly, 1, c + 2, "elliptic normal curve of degree " + std::to_string(c + 2));
    v.construction = {"elliptic", {{"c", static_cast<long long>(c)}}, {{"ab", {ab.first, ab.second}}}, {}};
    return v;
}

ParamVariety hyperelliptic_g2_curve(std::size_t c, const Field& f, std::vector<long long> fc) {
    if (!f.is_prime()) throw DomainError("genus-2 curve needs a prime field");
    if (f.modulus() == 2) throw DomainError("genus-2 curve y^2 = f(x) needs an odd characteristic");
    if (c < 1) throw DomainError("genus-2 curve needs c >= 1");
    UPoly poly = UPoly::from_integers(f, fc);
    if (poly.degree() != 5) throw DomainError("genus-2 model needs deg f = 5 over " + f.to_string());
    if (gcd(poly, poly.derivative()).degree() > 0) throw DomainError("f is not squarefree over " + f.to_string());
    auto v = function_field_curve(f, poly, 2, c + 3, "genus-2 curve of degree " + std::to_string(c + 3));
    v.construction = {"genus2", {{"c", static_cast<long long>(c)}}, {{"f", fc}}, {}};
    return v;
}

std::size_t coordinate_rank(const ParamVariety& v) {
    if (v.ff) return rank(v.ff->coeffs);
    std::map<Exponent, std::size_t> col;
    for (const auto& p : v.coords)
        for (const auto& [e, c] : p.terms()) col.emplace(e, 0);
    std::size_t j = 0;
    for (auto& [e, idx] : col) idx = j++;
    Matrix m(v.field, v.coords.size(), col.size());
    for (std::size_t i = 0; i < v.coords.size(); ++i)
        for (const auto& [e, c] : v.coords[i].terms()) m.set(i, col[e], c);
    return rank(m);
}

Point eval_coords(const ParamVariety& v, std::span<const Scalar> params) {
    if (v.ff) {
        if (params.size() != 2) throw DomainError("function-field point needs (x, y)");
        return v.ff->coeffs.apply(basis_values(*v.ff, params[0], params[1]));
    }
    Point out;
    out.reserve(v.coords.size());
    for (const auto& c : v.coords) out.push_back(c.eval(params));
    return out;
}

std::pair<UPoly, UPoly> hyperplane_pullback(const ParamVariety& v, std::span<const Scalar> lambda) {
    if (!v.ff) throw DomainError("hyperplane_pullback needs a function-field curve");
    const auto& ff = *v.ff;
    std::vector<Scalar> w(ff.basis.size(), Scalar::zero(v.field));
    for (std::size_t k = 0; k < ff.coeffs.rows(); ++k)
        for (std::size_t b = 0; b < ff.basis.size(); ++b) w[b] += lambda[k] * ff.coeffs.at(k, b);
    std::vector<Scalar> a, bb;
    for (std::size_t b = 0; b < ff.basis.size(); ++b) {
        auto [i, j] = ff.basis[b];
        auto& target = j == 0 ? a : bb;
        if (target.size() <= i) target.resize(i + 1, Scalar::zero(v.field));
        target[i] += w[b];
    }
    return {UPoly(v.field, a), UPoly(v.field, bb)};
}

PointConfig sample_points(const ParamVariety& v, std::size_t count, std::uint64_t seed) {
    const Field& f = v.field;
    Rng rng(seed);
    std::set<Point> seen;
    std::vector<Point> out;
    auto offer = [&](const Point& image) {
        if (std::all_of(image.begin(), image.end(), [](const Scalar& x) { return x.is_zero(); })) return;
        Point p = normalize_point(image);
        if (seen.insert(p).second) out.push_back(std::move(p));
    };
    auto too_small = [&](std::size_t available) {
        return FieldTooSmall("need " + std::to_string(count) + " distinct points on " + v.label + ", " + f.to_string() +
                             " supplies only " + std::to_string(available));
    };

    if (v.ff) {
        const std::uint64_t p = f.modulus();
        std::set<std::uint64_t> used;
        while (out.size() < count) {
            if (used.size() == p) throw too_small(out.size());
            std::uint64_t x = rng.below(p);
            if (!used.insert(x).second) continue;
            const Scalar xs = Scalar::residue(f, x);
            auto r = sqrt_mod(v.ff->f.eval(xs).residue(), p);
            if (!r) continue;
            std::uint64_t y1 = std::min(*r, (p - *r) % p), y2 = std::max(*r, (p - *r) % p);
            offer(eval_coords(v, Point{xs, Scalar::residue(f, y1)}));
            if (y2 != y1 && out.size() < count) offer(eval_coords(v, Point{xs, Scalar::residue(f, y2)}));
        }
        return PointConfig(f, v.amb, std::move(out));
    }

    if (v.blocks == std::vector<std::size_t>{2}) {
        // P^1: index i < p is [1:i], index p is [0:1]; over Q, integer t drawn from a widening range
        std::set<long long> used;
        const bool prime = f.is_prime();
        const std::uint64_t total = prime ? f.modulus() + 1 : 0;
        long long range = static_cast<long long>(4 * count + 16);
        while (out.size() < count) {
            if (prime && used.size() == total) throw too_small(out.size());
            long long idx = prime ? static_cast<long long>(rng.below(total)) : rng.uniform(-range, range);
            if (!used.insert(idx).second) {
                if (!prime && used.size() > static_cast<std::size_t>(range)) range *= 2;
                continue;
            }
            Point param = (prime && static_cast<std::uint64_t>(idx) == f.modulus())
                              ? Point{Scalar::zero(f), Scalar::one(f)}
                              : Point{Scalar::one(f), Scalar::from_int(f, idx)};
            offer(eval_coords(v, param));
        }
        return PointConfig(f, v.amb, std::move(out));
    }

    const std::size_t np = v.nparams();
    std::size_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > 50 * count + 1000) throw too_small(out.size());
        Point param;
        for (std::size_t i = 0; i < np; ++i) param.push_back(random_scalar(rng, f));
        offer(eval_coords(v, param));
    }
    return PointConfig(f, v.amb, std::move(out));
}

DegreeCheck verify_curve_degree(const ParamVariety& v, std::uint64_t seed, int trials) {
    if (!v.is_curve()) throw DomainError("degree verification is implemented for curves");
    DegreeCheck dc;
    Rng rng(seed);
    const Field& f = v.field;

    if (v.ff) {
        for (int t = 0; t < trials; ++t) {
            Point lambda;
            for (std::size_t i = 0; i <= v.amb; ++i) lambda.push_back(random_scalar(rng, f));
            auto [a, b] = hyperplane_pullback(v, lambda);
            UPoly norm = a * a - b * b * v.ff->f;
            if (norm.is_zero()) continue;
            dc.root_counts.push_back(distinct_root_count(norm));
        }
        const int mx = dc.root_counts.empty() ? 0 : *std::max_element(dc.root_counts.begin(), dc.root_counts.end());
        if (mx != v.d) {
            dc.detail = "hyperplane sections have at most " + std::to_string(mx) + " points, expected " + std::to_string(v.d);
            return dc;
        }
        // Hilbert polynomial dM + 1 - g in a degree where both h^1 terms vanish
        const int m1 = std::max(v.d - static_cast<int>(v.c()), 1);
        const std::size_t npts = static_cast<std::size_t>(m1) * v.d + 5;
        const std::size_t h = hilbert(sample_points(v, npts, derive_seed(seed, "hilbert")), m1);
        const long long expect = static_cast<long long>(v.d) * m1 + 1 - v.g;
        if (static_cast<long long>(h) != expect) {
            dc.detail = "Hilbert function in degree " + std::to_string(m1) + " is " + std::to_string(h) + ", expected " +
                        std::to_string(expect);
            return dc;
        }
        dc.ok = true;
        return dc;
    }

    if (v.blocks != std::vector<std::size_t>{2}) throw DomainError("degree verification needs a P^1 parametrization");
    std::vector<UPoly> phi;
    for (const auto& c : v.coords) phi.push_back(dehomogenize(c));
    UPoly common(f);
    Point at_infinity;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        common = gcd(common, phi[i]);
        at_infinity.push_back(phi[i].coeff(v.d));
    }
    if (common.degree() > 0) {
        dc.detail = "parametrization has base points";
        return dc;
    }
    if (std::all_of(at_infinity.begin(), at_infinity.end(), [](const Scalar& x) { return x.is_zero(); })) {
        dc.detail = "parametrization has a base point at infinity";
        return dc;
    }

    bool fiber_ok = false;
    for (int t = 0; t < 3 && !fiber_ok; ++t) {
        const Scalar t0 = random_scalar(rng, f);
        Point val;
        for (const auto& p : phi) val.push_back(p.eval(t0));
        auto nz = fiber_generators_pivot(val);
        if (nz.empty()) continue;
        const std::size_t i0 = nz.front();
        UPoly g(f);
        for (std::size_t j = 0; j < phi.size(); ++j)
            if (j != i0) g = gcd(g, phi[j] * val[i0] - phi[i0] * val[j]);
        fiber_ok = g.degree() == 1 && !proportional(at_infinity, val);
    }
    if (!fiber_ok) {
        dc.detail = "parametrization is not generically injective";
        return dc;
    }

    for (int t = 0; t < trials; ++t) {
        UPoly q(f);
        for (const auto& p : phi) q = q + p * random_scalar(rng, f);
        if (q.is_zero()) continue;
        int count = distinct_root_count(q) + (q.degree() < v.d ? 1 : 0);
        dc.root_counts.push_back(count);
    }
    const int mx = dc.root_counts.empty() ? 0 : *std::max_element(dc.root_counts.begin(), dc.root_counts.end());
    if (mx > v.d) {
        dc.detail = "hyperplane section with " + std::to_string(mx) + " points exceeds degree " + std::to_string(v.d);
        return dc;
    }
    if (mx < v.d) {
        dc.detail = "hyperplane sections have at most " + std::to_string(mx) + " points, expected " + std::to_string(v.d);
        return dc;
    }
    dc.ok = true;
    return dc;
}

ParamVariety project(const ParamVariety& v, const ProjectionCenter& center) {
    if (center.ambient != v.amb) throw DomainError("projection center lives in the wrong ambient space");
    if (center.dim + 1 >= v.amb) throw DomainError("projection center is too large");
    const std::size_t new_amb = v.amb - center.dim - 1;
    if (new_amb < v.n + 2)
        throw DomainError("projection to P^" + std::to_string(new_amb) + " would leave codimension below 2");
    for (const auto& p : center.basis)
        for (const auto& x : p)
            if (!(x.field() == v.field)) throw FieldMismatch("projection center over " + x.field().to_string());

    auto forms = kernel_basis(Matrix::from_rows(v.field, center.basis, v.amb + 1));
    ParamVariety out = v;
    out.amb = new_amb;
    out.linearly_normal = false;
    out.label = v.label + " projected from a " + std::to_string(center.dim) + "-plane";
    if (v.ff) {
        Matrix w = Matrix::from_rows(v.field, forms, v.amb + 1);
        out.ff->coeffs = w * v.ff->coeffs;
    } else {
        out.coords.clear();
        for (const auto& w : forms) {
            MPoly c(v.field, v.nparams());
            for (std::size_t j = 0; j <= v.amb; ++j) c += v.coords[j] * w[j];
            out.coords.push_back(std::move(c));
        }
    }
    Construction cons{"projection", {{"dim", static_cast<long long>(center.dim)}}, {}, {v.construction}};
    for (std::size_t i = 0; i < center.basis.size(); ++i)
        cons.lists["center_" + std::to_string(i)] = integer_representative(center.basis[i]);
    out.construction = std::move(cons);

    if (coordinate_rank(out) != out.amb + 1) throw VerificationError("projected variety is degenerate");
    if (out.is_curve()) {
        std::uint64_t s = 0;
        for (const auto& p : center.basis)
            for (const auto& x : integer_representative(p)) s = derive_seed(s, static_cast<std::uint64_t>(x));
        auto dc = verify_curve_degree(out, s);
        if (!dc.ok) throw VerificationError("center meets the secant locus: " + dc.detail);
    }
    return out;
}

ParamVariety projected_rnc(std::size_t r, const Field& f, std::uint64_t seed) {
    if (r < 4) throw DomainError("projected_rnc needs r >= 4 so the image keeps codimension >= 2");
    const ParamVariety src = rational_normal_curve(r, f);
    std::string last;
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        Point p;
        for (std::size_t i = 0; i <= r; ++i) p.push_back(random_scalar(rng, f));
        if (std::all_of(p.begin(), p.end(), [](const Scalar& x) { return x.is_zero(); })) continue;
        try {
            auto out = project(src, ProjectionCenter(r, {p}));
            out.label = "RNC(" + std::to_string(r) + ") projected to P^" + std::to_string(r - 1);
            out.construction = {"projected_rnc", {{"r", static_cast<long long>(r)}, {"seed", static_cast<long long>(seed)}}, {}, {}};
            return out;
        } catch (const VerificationError& e) {
            last = e.what();
        }
    }
    throw ConstructionError("projected RNC(" + std::to_string(r) + ") failed: " + last);
}

ParamVariety multisecant_projection(std::size_t c, std::size_t k, std::size_t g, const Field& f, std::uint64_t seed) {
    if (g >= 3) throw Unsupported("multisecant projection is implemented for source genus 0, 1, 2");
    if (k < g + 3) throw DomainError("multisecant projection needs g <= k-3");
    if (c < 2) throw DomainError("multisecant projection needs c >= 2");
    const std::size_t d = c + k - 1;
    ParamVariety src = g == 0 ? rational_normal_curve(d, f) : g == 1 ? elliptic_normal_curve(d - 2, f) : hyperelliptic_g2_curve(d - 3, f);
    std::string last;
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        const std::uint64_t s = derive_seed(seed, attempt);
        try {
            auto pts = sample_points(src, k - g, derive_seed(s, "secant points"));
            Rng rng(derive_seed(s, "center"));
            std::vector<Point> lam;
            for (std::size_t i = 0; i + 2 + g < k; ++i) {
                Point q(src.amb + 1, Scalar::zero(f));
                for (const auto& p : pts.points()) {
                    Scalar w = random_nonzero(rng, f);
                    for (std::size_t j = 0; j <= src.amb; ++j) q[j] += w * p[j];
                }
                lam.push_back(std::move(q));
            }
            auto out = project(src, ProjectionCenter(src.amb, lam));
            out.label = "multisecant projection c=" + std::to_string(c) + " k=" + std::to_string(k) + " g=" + std::to_string(g);
            out.construction = {"multisecant",
                                {{"c", static_cast<long long>(c)}, {"k", static_cast<long long>(k)}, {"g", static_cast<long long>(g)},
                                 {"seed", static_cast<long long>(seed)}},
                                {},
                                {}};
            return out;
        } catch (const VerificationError& e) {
            last = e.what();
        } catch (const DomainError& e) {
            last = e.what();
        }
    }
    throw ConstructionError("multisecant projection failed after " + std::to_string(retry_budget) + " attempts: " + last);
}

ParamVariety genus_zero_scroll_curve(std::size_t c, std::size_t k, std::size_t d, const Field& f, std::uint64_t seed) {
    if (d <= c || c + k <= d || d <= k)
        throw DomainError("genus-0 scroll witness needs c < d < c+k and d > k");
    auto v = scroll_section_curve(c + k - d, d - k, d - c, f, seed);
    v.label = "genus 0 degree " + std::to_string(d) + " curve, " + v.label;
    v.construction = {"genus0_scroll",
                      {{"c", static_cast<long long>(c)}, {"k", static_cast<long long>(k)}, {"d", static_cast<long long>(d)},
                       {"seed", static_cast<long long>(seed)}},
                      {},
                      {}};
    return v;
}

ParamVariety section_curve(const ParamVariety& v, std::uint64_t seed) {
    if (v.is_curve()) return v;
    Rng rng(seed);
    const Field& f = v.field;
    const MPoly s = MPoly::variable(f, 2, 0), t = MPoly::variable(f, 2, 1);
    ParamVariety out;
    out.n = 1;
    out.amb = v.amb;
    out.d = v.d;
    out.g = 0;
    out.field = f;
    out.blocks = {2};
    out.label = "curve section of " + v.label;
    out.construction = {"section", {{"seed", static_cast<long long>(seed)}}, {}, {v.construction}};
    if (v.construction.name == "scroll") {
        const auto a = static_cast<std::size_t>(v.construction.ints.at("a")), b = static_cast<std::size_t>(v.construction.ints.at("b"));
        for (int attempt = 0; attempt < retry_budget; ++attempt) {
            MPoly beta = random_binary_form(rng, f, b), alpha = random_binary_form(rng, f, a);
            out.coords.clear();
            for (const auto& c : v.coords) out.coords.push_back(c.compose({s, t, beta, alpha}));
            if (verify_curve_degree(out, rng.next()).ok) return out;
        }
    } else if (v.construction.name == "veronese") {
        for (int attempt = 0; attempt < retry_budget; ++attempt) {
            const std::vector<MPoly> conic{s * s, s * t, t * t};
            std::vector<MPoly> lin;
            for (int i = 0; i < 3; ++i) {
                MPoly l(f, 2);
                for (int j = 0; j < 3; ++j) l += conic[j] * random_scalar(rng, f);
                lin.push_back(std::move(l));
            }
            out.coords.clear();
            for (const auto& c : v.coords) out.coords.push_back(c.compose(lin));
            if (verify_curve_degree(out, rng.next()).ok) return out;
        }
    } else {
        throw Unsupported("curve sections are implemented for scrolls and the Veronese surface");
    }
    throw ConstructionError("no smooth curve section of " + v.label + " found");
}

namespace {

json construction_json(const Construction& c) {
    json params = json::object();
    for (const auto& [k, v] : c.ints) params[k] = v;
    for (const auto& [k, v] : c.lists) params[k] = v;
    json j{{"name", c.name}, {"params", params}};
    if (!c.inner.empty()) {
        json inner = json::array();
        for (const auto& x : c.inner) inner.push_back(construction_json(x));
        j["inner"] = inner;
    }
    return j;
}

Construction construction_from_json(const json& j) {
    Construction c;
    c.name = j.at("name").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) {
        if (v.is_array())
            c.lists[k] = v.get<std::vector<long long>>();
        else
            c.ints[k] = v.get<long long>();
    }
    if (j.contains("inner"))
        for (const auto& x : j.at("inner")) c.inner.push_back(construction_from_json(x));
    return c;
}

std::size_t uparam(const Construction& c, const char* key) {
    long long v = c.ints.at(key);
    if (v < 0) throw FormatError(std::string("negative parameter ") + key);
    return static_cast<std::size_t>(v);
}

ParamVariety build(const Construction& c, const Field& f) {
    const auto& n = c.name;
    auto seed = [&] { return static_cast<std::uint64_t>(c.ints.at("seed")); };
    if (n == "rnc") return rational_normal_curve(uparam(c, "r"), f);
    if (n == "scroll") return scroll_surface(uparam(c, "a"), uparam(c, "b"), f);
    if (n == "veronese") return veronese_surface(f);
    if (n == "scroll_section") return scroll_section_curve(uparam(c, "a"), uparam(c, "b"), uparam(c, "k"), f, seed());
    if (n == "elliptic") {
        const auto& ab = c.lists.at("ab");
        if (ab.size() != 2) throw FormatError("elliptic construction needs two coefficients");
        return elliptic_normal_curve(uparam(c, "c"), f, {ab[0], ab[1]});
    }
    if (n == "genus2") return hyperelliptic_g2_curve(uparam(c, "c"), f, c.lists.at("f"));
    if (n == "projected_rnc") return projected_rnc(uparam(c, "r"), f, seed());
    if (n == "multisecant") return multisecant_projection(uparam(c, "c"), uparam(c, "k"), uparam(c, "g"), f, seed());
    if (n == "genus0_scroll") return genus_zero_scroll_curve(uparam(c, "c"), uparam(c, "k"), uparam(c, "d"), f, seed());
    if (n == "projection" || n == "section") {
        if (c.inner.size() != 1) throw FormatError(n + " construction needs exactly one inner construction");
        ParamVariety base = build(c.inner[0], f);
        if (n == "section") return section_curve(base, seed());
        std::vector<Point> pts;
        for (std::size_t i = 0; c.lists.count("center_" + std::to_string(i)); ++i) {
            Point p;
            for (long long x : c.lists.at("center_" + std::to_string(i))) p.push_back(Scalar::from_int(f, x));
            pts.push_back(std::move(p));
        }
        return project(base, ProjectionCenter(base.amb, std::move(pts)));
    }
    throw FormatError("unknown construction '" + n + "'");
}

}  // namespace

ParamVariety rebuild_over(const ParamVariety& v, const Field& f) {
    try {
        return build(v.construction, f);
    } catch (const std::out_of_range& e) {
        throw FormatError(std::string("construction is missing a parameter: ") + e.what());
    }
}

std::string descriptor_json(const ParamVariety& v) {
    json j;
    j["label"] = v.label;
    j["n"] = v.n;
    j["c"] = v.c();
    j["d"] = v.d;
    j["g"] = v.g;
    j["field"] = v.field.to_string();
    auto it = v.construction.ints.find("seed");
    j["seed"] = it == v.construction.ints.end() ? json(nullptr) : json(it->second);
    j["construction"] = construction_json(v.construction);
    return j.dump();
}

ParamVariety from_descriptor(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("descriptor is not valid JSON: ") + e.what());
    }
    try {
        const std::string fs = j.at("field").get<std::string>();
        Field f = Field::rationals();
        if (fs != "Q") {
            if (fs.size() < 5 || fs.rfind("GF(", 0) != 0 || fs.back() != ')') throw FormatError("bad field '" + fs + "'");
            f = Field::prime(std::stoull(fs.substr(3, fs.size() - 4)));
        }
        return build(construction_from_json(j.at("construction")), f);
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed descriptor: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw FormatError(std::string("descriptor is missing a parameter: ") + e.what());
    }
}

}  // namespace lowdeg
