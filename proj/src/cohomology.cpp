#include "lowdeg/cohomology.hpp"

#include <sstream>

#include "lowdeg/error.hpp"
#include "lowdeg/formulas.hpp"
#include "lowdeg/rng.hpp"

namespace lowdeg {

namespace {

constexpr int stable_window = 3;
constexpr int max_batches = 40;

int icast(std::size_t x) { return static_cast<int>(x); }

void require_curve(const ParamVariety& v, const char* what) {
    if (!v.is_curve()) throw DomainError(std::string(what) + " needs a curve, got " + v.label);
    if (v.g < 0) throw DomainError(std::string(what) + " needs the arithmetic genus of " + v.label);
}

void require_rr_range(const ParamVariety& v, const char* what) {
    require_curve(v, what);
    if (v.d > 2 * icast(v.c()) + 1) {
        throw Unsupported(std::string(what) + ": d = " + std::to_string(v.d) + " > 2c+1 = " +
                          std::to_string(2 * v.c() + 1) + ", h^1(O_C(m)) need not vanish");
    }
}

// Coordinates of the section points as residues: q(t) for P^1 curves, N(x) for y^2 = f(x).
struct SectionRing {
    UPoly modulus;
    std::vector<UPoly> coords;
};

std::vector<UPoly> p1_coords(const ParamVariety& v) {
    std::vector<UPoly> out;
    for (const auto& c : v.coords) {
        std::vector<Scalar> co;
        for (const auto& [e, x] : c.terms()) {
            if (co.size() <= e[1]) co.resize(e[1] + 1, Scalar::zero(v.field));
            co[e[1]] += x;
        }
        out.emplace_back(v.field, std::move(co));
    }
    return out;
}

Scalar random_coefficient(Rng& rng, const Field& f) {
    if (f.is_prime()) return Scalar::residue(f, rng.below(f.modulus()));
    return Scalar::from_int(f, rng.uniform(-1000, 1000));
}

SectionRing hyperplane_section(const ParamVariety& v, std::uint64_t seed) {
    Rng rng(seed);
    const Field& f = v.field;
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Scalar> lambda;
        for (std::size_t i = 0; i <= v.amb; ++i) lambda.push_back(random_coefficient(rng, f));
        if (v.ff) {
            auto [a, b] = hyperplane_pullback(v, lambda);
            if (b.is_zero()) continue;
            UPoly n = a * a - b * b * v.ff->f;
            if (n.degree() != v.d || gcd(b, n).degree() > 0) continue;
            const UPoly y = (-(a * inverse_mod(b, n))) % n;
            SectionRing r{n, {}};
            const auto& ff = *v.ff;
            for (std::size_t k = 0; k <= v.amb; ++k) {
                std::vector<Scalar> pc, qc;
                for (std::size_t j = 0; j < ff.basis.size(); ++j) {
                    auto [i, yj] = ff.basis[j];
                    auto& t = yj == 0 ? pc : qc;
                    if (t.size() <= i) t.resize(i + 1, Scalar::zero(f));
                    t[i] += ff.coeffs.at(k, j);
                }
                r.coords.push_back((UPoly(f, pc) + UPoly(f, qc) * y) % n);
            }
            return r;
        }
        auto cs = p1_coords(v);
        UPoly q(f);
        for (std::size_t i = 0; i < cs.size(); ++i) q = q + cs[i] * lambda[i];
        if (q.degree() != v.d) continue;
        SectionRing r{q, {}};
        for (auto& c : cs) r.coords.push_back(c % q);
        return r;
    }
    throw VerificationError("no transverse hyperplane found for " + v.label);
}

}  // namespace

AmResult a_m_detail(const ParamVariety& v, unsigned m, std::uint64_t seed) {
    if (m < 1) throw DomainError("a_m needs m >= 1");
    AmResult r;
    const long long width = binom(icast(v.amb) + icast(m), m);
    if (v.is_curve()) {
        r.samples = static_cast<std::size_t>(m) * v.d + 1;
        r.rank = hilbert(sample_points(v, r.samples, seed), m);
        r.value = width - static_cast<long long>(r.rank);
        return r;
    }
    const auto mons = monomials(v.amb + 1, m);
    EchelonBasis eb(v.field, mons.size());
    int quiet = 0;
    for (int batch = 0; quiet < stable_window; ++batch) {
        if (batch == max_batches) {
            throw VerificationError("rank of degree-" + std::to_string(m) + " forms on " + v.label + " did not stabilize");
        }
        auto pts = sample_points(v, 2 * mons.size(), derive_seed(seed, static_cast<std::uint64_t>(batch)));
        r.samples += pts.size();
        bool grew = false;
        for (const auto& p : pts.points()) {
            if (eb.rank() == mons.size()) break;
            if (eb.add(monomial_row(p, mons))) grew = true;
        }
        quiet = grew ? 0 : quiet + 1;
    }
    r.rank = eb.rank();
    r.value = width - static_cast<long long>(r.rank);
    r.stabilized = true;
    return r;
}

long long a_m(const ParamVariety& v, unsigned m, std::uint64_t seed) { return a_m_detail(v, m, seed).value; }

long long h1_ideal(const ParamVariety& v, unsigned m, std::uint64_t seed) {
    require_rr_range(v, "h1_ideal");
    const long long h = a_m(v, m, seed) - u(icast(v.c()), v.g, v.d, icast(m));
    if (h < 0) {
        throw VerificationError("negative h^1(I(" + std::to_string(m) + ")) for " + v.label + ": genus or degree is wrong");
    }
    return h;
}

std::string DeficiencyProfile::nonzero_string() const {
    std::string s = "(";
    bool first = true;
    for (const auto& [m, h] : h1) {
        if (h == 0) continue;
        if (!first) s += ",";
        s += std::to_string(h);
        first = false;
    }
    return s + ")";
}

namespace {

std::size_t regularity_from(const std::map<unsigned, long long>& h1, int g) {
    unsigned last = 0;
    for (const auto& [m, h] : h1)
        if (h != 0) last = m;
    if (last > 0) return last + 2;
    return g == 0 ? 2 : 3;
}

}  // namespace

DeficiencyProfile deficiency_profile(const ParamVariety& v, std::uint64_t seed) {
    require_rr_range(v, "deficiency_profile");
    DeficiencyProfile p;
    p.c = v.c();
    p.d = v.d;
    p.g = v.g;
    for (unsigned m = 1;; ++m) {
        if (icast(m) > v.d + 1) throw VerificationError("h^1 profile of " + v.label + " does not terminate");
        const long long a = a_m(v, m, derive_seed(seed, m));
        const long long uu = u(icast(p.c), v.g, v.d, icast(m));
        if (a < uu) throw VerificationError("negative h^1(I(" + std::to_string(m) + ")) for " + v.label);
        p.a[m] = a;
        p.u[m] = uu;
        p.h1[m] = a - uu;
        if (a == uu) break;
    }
    p.reg = regularity_from(p.h1, v.g);
    return p;
}

DeficiencyProfile profile_from_h1(std::size_t c, int d, int g, const std::vector<long long>& h1) {
    DeficiencyProfile p;
    p.c = c;
    p.d = d;
    p.g = g;
    for (std::size_t i = 0; i < h1.size(); ++i) {
        const unsigned m = static_cast<unsigned>(i + 1);
        p.u[m] = u(icast(c), g, d, icast(m));
        p.h1[m] = h1[i];
        p.a[m] = p.u[m] + h1[i];
    }
    if (h1.empty() || h1.back() != 0) {
        const unsigned m = static_cast<unsigned>(h1.size() + 1);
        p.u[m] = u(icast(c), g, d, icast(m));
        p.h1[m] = 0;
        p.a[m] = p.u[m];
    }
    p.reg = regularity_from(p.h1, g);
    return p;
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::holds: return "holds";
        case CheckStatus::fails: return "fails";
        case CheckStatus::hypothesis_violated: return "hypothesis violated";
    }
    return "?";
}

namespace {

long long h1_at(const DeficiencyProfile& p, unsigned m) {
    auto it = p.h1.find(m);
    return it == p.h1.end() ? 0 : it->second;
}

std::optional<std::string> hypothesis(const DeficiencyProfile& p) {
    if (p.d > 2 * icast(p.c)) {
        return "hypothesis d <= 2c violated (d = " + std::to_string(p.d) + ", 2c = " + std::to_string(2 * p.c) + ")";
    }
    if (h1_at(p, 1) == 0) return std::string("hypothesis violated: curve is linearly normal");
    return std::nullopt;
}

}  // namespace

CheckResult verify_monotonic(const DeficiencyProfile& p) {
    CheckResult r;
    std::string bad;
    for (unsigned m = 2; m + 1 <= p.reg; ++m) {
        if (!(h1_at(p, m - 1) > h1_at(p, m))) {
            bad = "h1(" + std::to_string(m - 1) + ") = " + std::to_string(h1_at(p, m - 1)) + " <= h1(" +
                  std::to_string(m) + ") = " + std::to_string(h1_at(p, m));
            break;
        }
    }
    if (auto h = hypothesis(p)) {
        r.status = CheckStatus::hypothesis_violated;
        r.detail = *h + (bad.empty() ? "; profile decreases anyway" : "; " + bad);
        return r;
    }
    r.status = bad.empty() ? CheckStatus::holds : CheckStatus::fails;
    r.detail = bad.empty() ? "strictly decreasing on 2 <= m <= " + std::to_string(p.reg - 1) : bad;
    return r;
}

CheckResult verify_reg_bound(const DeficiencyProfile& p) {
    CheckResult r;
    const long long bound = p.d - icast(p.c) + 1 - p.g;
    std::string detail = "reg = " + std::to_string(p.reg) + ", d-c+1-g = " + std::to_string(bound);
    bool ok = static_cast<long long>(p.reg) <= bound;
    r.equality = static_cast<long long>(p.reg) == bound;
    if (ok && r.equality) {
        for (long long m = 1; m <= bound - 1; ++m) {
            const long long want = p.d - icast(p.c) - p.g - m;
            if (h1_at(p, static_cast<unsigned>(m)) != want) {
                ok = false;
                detail += "; equality but h1(" + std::to_string(m) + ") = " +
                          std::to_string(h1_at(p, static_cast<unsigned>(m))) + " != " + std::to_string(want);
                break;
            }
        }
        if (ok) detail += "; equality with h1(m) = d-c-g-m";
    }
    if (auto h = hypothesis(p)) {
        r.status = CheckStatus::hypothesis_violated;
        r.detail = *h + "; " + detail;
        return r;
    }
    r.status = ok ? CheckStatus::holds : CheckStatus::fails;
    r.detail = detail;
    return r;
}

A2Classification classify_a2_curve(const ParamVariety& v, std::uint64_t seed) {
    require_rr_range(v, "classify_a2_curve");
    const int c = icast(v.c());
    A2Classification r;
    r.a2 = a_m(v, 2, seed);
    r.k = static_cast<int>(binom(c + 1, 2) + 1 - r.a2);
    if (r.k > c) {
        throw DomainError("a_2 = " + std::to_string(r.a2) + " gives k = " + std::to_string(r.k) + " > c = " +
                          std::to_string(c) + ", outside the classified range");
    }
    r.h1_2 = r.a2 - u(c, v.g, v.d, 2);
    r.predicted_h1_2 = 2LL * (v.d - c) - 1 - v.g - r.k;
    r.identity_holds = r.h1_2 == r.predicted_h1_2;
    const int g = v.g, e = v.d - c;
    switch (r.k) {
        case 1: r.case_name = "rational normal curve"; break;
        case 2: r.case_name = "linearly normal curve of arithmetic genus one"; break;
        case 3:
            if (g == 0 && e == 2) r.case_name = "isomorphic projection of a rational normal curve from a point";
            else if (g == 2 && e == 3) r.case_name = "linearly normal curve of arithmetic genus two";
            break;
        case 4:
            if (g == 0 && e == 3) r.case_name = "smooth rational curve of degree c+3 with a 4-secant line";
            else if (g == 1 && e == 3) r.case_name = "isomorphic projection of a linearly normal genus-one curve from a point";
            else if (g == 3 && e == 4) r.case_name = "linearly normal curve of arithmetic genus three";
            break;
        default: r.case_name = "k = " + std::to_string(r.k) + " (no classification)"; break;
    }
    if (r.case_name.empty()) {
        r.case_name = "unexpected (g, d) = (" + std::to_string(g) + ", c+" + std::to_string(e) + ") for k = " +
                      std::to_string(r.k);
    }
    return r;
}

BoundResult bound_check(const ParamVariety& v, unsigned m, int k, std::uint64_t seed) {
    const int c = icast(v.c());
    if (k < 1 || k > c + 1) throw DomainError("bound_check needs 1 <= k <= c+1");
    if (v.d < c + k) throw DomainError("bound_check needs d >= c+k");
    BoundResult r;
    r.a = a_m(v, m, seed);
    r.bound = H(k, icast(v.n), c, icast(m));
    r.holds = r.a <= r.bound;
    r.equality = r.a == r.bound;
    return r;
}

SectionResult section_check(const ParamVariety& v, std::uint64_t seed) {
    const ParamVariety curve = section_curve(v, derive_seed(seed, "section"));
    const SectionRing ring = hyperplane_section(curve, derive_seed(seed, "hyperplane"));
    const std::size_t len = static_cast<std::size_t>(ring.modulus.degree());
    EchelonBasis eb(v.field, len);
    for (std::size_t i = 0; i < ring.coords.size(); ++i)
        for (std::size_t j = i; j < ring.coords.size(); ++j) {
            UPoly prod = (ring.coords[i] * ring.coords[j]) % ring.modulus;
            std::vector<Scalar> row(len, Scalar::zero(v.field));
            for (std::size_t t = 0; t < prod.coeffs().size(); ++t) row[t] = prod.coeffs()[t];
            eb.add(row);
        }
    SectionResult r;
    r.a2 = a_m(v, 2, seed);
    r.section_a2 = binom(icast(v.c()) + 2, 2) - static_cast<long long>(eb.rank());
    r.holds = r.a2 <= r.section_a2;
    return r;
}

std::string profile_csv(const DeficiencyProfile& p) {
    std::ostringstream out;
    out << "m,a_m,u,h1\n";
    for (const auto& [m, h] : p.h1) out << m << "," << p.a.at(m) << "," << p.u.at(m) << "," << h << "\n";
    return out.str();
}

}  // namespace lowdeg
