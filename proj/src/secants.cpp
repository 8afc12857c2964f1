#include "lowdeg/secants.hpp"

#include <json.hpp>

#include "lowdeg/cohomology.hpp"
#include "lowdeg/error.hpp"
#include "lowdeg/formulas.hpp"
#include "lowdeg/rng.hpp"

namespace lowdeg {

namespace {

constexpr std::uint64_t min_terracini_prime = 1000000;
constexpr long long param_range = 1000;

Scalar reduce_to(const Scalar& q, const Field& f) {
    const mpq_class& r = q.rational();
    const Scalar num = Scalar::from_mpz(f, r.get_num());
    const Scalar den = Scalar::from_mpz(f, r.get_den());
    if (den.is_zero()) throw DomainError("coefficient denominator vanishes in " + f.to_string());
    return num / den;
}

MPoly reduce_to(const MPoly& p, const Field& f) {
    MPoly out(f, p.nvars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, reduce_to(c, f));
    return out;
}

// Polynomials of the cone map and its partials: row 0 is nu_2 o phi, row 1+i is d/dt_i.
std::vector<std::vector<MPoly>> jacobian_rows(const std::vector<MPoly>& coords2, std::size_t nparams) {
    std::vector<std::vector<MPoly>> rows(nparams + 1);
    rows[0] = coords2;
    for (std::size_t i = 0; i < nparams; ++i)
        for (const auto& f : coords2) rows[i + 1].push_back(f.diff(i));
    return rows;
}

Matrix terracini_matrix(const std::vector<std::vector<MPoly>>& rows, const std::vector<std::vector<Scalar>>& points,
                        const Field& f, std::size_t width) {
    std::vector<Scalar> e;
    e.reserve(points.size() * rows.size() * width);
    for (const auto& pt : points)
        for (const auto& r : rows)
            for (const auto& poly : r) e.push_back(poly.eval(pt));
    return Matrix(f, points.size() * rows.size(), width, std::move(e));
}

}  // namespace

QuadraticEmbedding veronese_square(const ParamVariety& v, std::uint64_t seed) {
    if (!v.is_polynomial()) throw Unsupported("quadratic embedding needs a polynomial parametrization, got " + v.label);
    QuadraticEmbedding y;
    y.base = v;
    for (std::size_t i = 0; i < v.coords.size(); ++i)
        for (std::size_t j = i; j < v.coords.size(); ++j) y.coords2.push_back(v.coords[i] * v.coords[j]);
    y.N = y.coords2.size() - 1;
    y.span_dim = y.N - static_cast<std::size_t>(a_m(v, 2, seed));
    return y;
}

SecantRank secant_dim(const QuadraticEmbedding& y, std::size_t k, int trials, std::uint64_t seed, bool confirm) {
    const Field& base = y.base.field;
    if (base.is_prime() && base.modulus() < min_terracini_prime) {
        throw DomainError("Terracini ranks need Q or a prime above 10^6, got " + base.to_string());
    }
    if (trials < 1) throw DomainError("secant_dim needs at least one trial");
    const bool rational = base.is_rational();
    const Field work = rational ? Field::prime(terracini_prime) : base;
    const std::size_t np = y.base.nparams();
    const std::size_t width = y.coords2.size();

    std::vector<MPoly> work_coords;
    for (const auto& p : y.coords2) work_coords.push_back(rational ? reduce_to(p, work) : p);
    const auto work_rows = jacobian_rows(work_coords, np);

    Rng rng(seed);
    std::size_t best = 0;
    std::vector<std::vector<long long>> best_ints;
    for (int t = 0; t < trials; ++t) {
        std::vector<std::vector<long long>> ints;
        std::vector<std::vector<Scalar>> pts;
        for (int guard = 0; pts.size() < k + 1; ++guard) {
            if (guard > 100 * static_cast<int>(k + 1)) throw VerificationError("no usable parameter points for " + y.base.label);
            std::vector<long long> iv;
            std::vector<Scalar> sv;
            for (std::size_t i = 0; i < np; ++i) {
                if (rational) {
                    iv.push_back(rng.uniform(-param_range, param_range));
                    sv.push_back(Scalar::from_int(work, iv.back()));
                } else {
                    sv.push_back(Scalar::residue(work, rng.below(work.modulus())));
                }
            }
            bool nonzero = false;
            for (const auto& c : work_coords) nonzero = nonzero || !c.eval(sv).is_zero();
            if (!nonzero) continue;
            ints.push_back(std::move(iv));
            pts.push_back(std::move(sv));
        }
        const std::size_t r = rank(terracini_matrix(work_rows, pts, work, width));
        if (r > best) {
            best = r;
            best_ints = ints;
        }
    }
    if (best == 0) throw VerificationError("Terracini matrix vanishes for " + y.base.label);

    SecantRank out;
    out.dim = best - 1;
    if (confirm && rational) {
        const auto q_rows = jacobian_rows(y.coords2, np);
        std::vector<std::vector<Scalar>> pts;
        for (const auto& iv : best_ints) {
            std::vector<Scalar> sv;
            for (long long x : iv) sv.push_back(Scalar::from_int(base, x));
            pts.push_back(std::move(sv));
        }
        const std::size_t r = rank(terracini_matrix(q_rows, pts, base, width));
        out.rational_confirmed = r == best;
        out.dim = r - 1;
    }
    return out;
}

namespace {

ZakInvariants compute_zak(const ParamVariety& v, int trials, std::uint64_t seed, bool confirm) {
    const QuadraticEmbedding y = veronese_square(v, seed);
    ZakInvariants z;
    z.label = v.label;
    z.n = v.n;
    z.c = v.c();
    z.d = v.d;
    z.a2 = static_cast<long long>(y.N - y.span_dim);
    z.span_dim = y.span_dim;
    z.trials = trials;
    z.seed = seed;
    z.rational_confirmed = confirm && v.field.is_rational();

    for (std::size_t k = 0;; ++k) {
        if (k > y.N + 1) throw VerificationError("secant varieties of " + v.label + " never fill the span");
        auto r = secant_dim(y, k, trials, derive_seed(seed, k), confirm);
        z.rational_confirmed = z.rational_confirmed && r.rational_confirmed;
        if (k == 0 && r.dim != v.n) {
            throw VerificationError("tangent rank of " + v.label + " gives dimension " + std::to_string(r.dim));
        }
        if (r.dim > y.span_dim) throw VerificationError("secant dimension exceeds the span for " + v.label);
        z.s.push_back(r.dim);
        if (r.dim == y.span_dim) break;
    }
    z.k2 = z.s.size() - 1;
    const long long n = static_cast<long long>(z.n);
    z.delta.assign(z.k2 + 1, 0);
    for (std::size_t k = 1; k <= z.k2; ++k)
        z.delta[k] = static_cast<long long>(z.s[k - 1]) + n + 1 - static_cast<long long>(z.s[k]);
    for (std::size_t k = 1; k <= z.k2; ++k)
        if (z.delta[k] == 0) z.ell2 = k;
    for (std::size_t k = z.ell2 + 1; k <= z.k2; ++k) z.delta2 += z.delta[k];

    const long long c = static_cast<long long>(z.c);
    z.zak4_ok = z.a2 == z.delta2 - static_cast<long long>(z.k2 + 1) * (n + 1) + binom(c + n + 2, 2);

    z.chain.a2 = z.a2;
    long long tail = 0;
    for (std::size_t k = z.ell2 + 1; k <= z.c + z.n; ++k) tail += z.delta_at(k);
    z.chain.middle = tail - binom(n + 1, 2) + binom(c + 1, 2);
    z.chain.right = z.delta2 - binom(n + 1, 2) + binom(c + 1, 2);
    z.chain.equalities = z.chain.a2 == z.chain.middle && z.chain.middle == z.chain.right;
    z.chain.ok = z.chain.a2 <= z.chain.middle && z.chain.middle <= z.chain.right &&
                 z.chain.equalities == (z.k2 == z.c + z.n);
    return z;
}

}  // namespace

ZakInvariants zak_invariants(const ParamVariety& v, int trials, std::uint64_t seed, bool confirm) {
    ZakInvariants z = compute_zak(v, trials, seed, confirm);
    if (z.zak4_ok) return z;
    z = compute_zak(v, 2 * trials, seed, confirm);
    if (!z.zak4_ok) {
        throw VerificationError("a_2 identity fails for " + v.label + " with " + std::to_string(2 * trials) +
                                " Terracini trials (a_2 = " + std::to_string(z.a2) + ", delta2 = " +
                                std::to_string(z.delta2) + ", k2 = " + std::to_string(z.k2) + ")");
    }
    return z;
}

std::string invariant_json(const ZakInvariants& z) {
    nlohmann::json j;
    j["label"] = z.label;
    j["n"] = z.n;
    j["c"] = z.c;
    j["d"] = z.d;
    j["s"] = z.s;
    j["delta"] = std::vector<long long>(z.delta.begin() + (z.delta.empty() ? 0 : 1), z.delta.end());
    j["ell2"] = z.ell2;
    j["k2"] = z.k2;
    j["delta2"] = z.delta2;
    j["zak4_ok"] = z.zak4_ok;
    j["trials"] = z.trials;
    j["seed"] = z.seed;
    return j.dump();
}

std::string to_string(Table2Row r) {
    switch (r) {
        case Table2Row::minimal_degree: return "degree c+1, depth n+1";
        case Table2Row::almost_minimal_depth1: return "degree c+2, depth 1";
        case Table2Row::almost_minimal_depth_n: return "degree c+2, depth n";
        case Table2Row::del_pezzo: return "degree c+2, depth n+1";
        case Table2Row::acm_degree_c3: return "degree c+3, depth n+1";
    }
    return "?";
}

std::vector<long long> table2_expected(Table2Row r, std::size_t n) {
    std::vector<long long> out;
    for (std::size_t i = 1; i <= n; ++i) {
        const long long ii = static_cast<long long>(i);
        switch (r) {
            case Table2Row::minimal_degree: out.push_back(ii); break;
            case Table2Row::almost_minimal_depth1: out.push_back(ii - 1); break;
            case Table2Row::almost_minimal_depth_n: out.push_back(i == 1 ? 0 : i == 2 ? 1 : ii); break;
            case Table2Row::del_pezzo: out.push_back(i == 1 ? 0 : ii); break;
            case Table2Row::acm_degree_c3: out.push_back(i == 1 ? 0 : i == 2 ? 1 : ii); break;
        }
    }
    out.push_back(r == Table2Row::almost_minimal_depth1 ? static_cast<long long>(n) : 0);
    return out;
}

Table2Comparison table2_row(const ZakInvariants& z, Table2Row row) {
    Table2Comparison t{row, {}, true};
    const auto want = table2_expected(row, z.n);
    for (std::size_t i = 0; i < want.size(); ++i) {
        Table2Entry e;
        e.k = z.c + 1 + i;
        e.expected = want[i];
        e.computed = z.delta_at(e.k);
        e.match = e.expected == e.computed;
        t.all_match = t.all_match && e.match;
        t.entries.push_back(e);
    }
    return t;
}

}  // namespace lowdeg
