#include "lowdeg/formulas.hpp"

#include <functional>
#include <gmpxx.h>
#include <sstream>

#include "lowdeg/error.hpp"

namespace lowdeg {

long long binom(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    if (a < 0) throw DomainError("binomial with negative top argument");
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    if (!r.fits_slong_p()) throw DomainError("binomial C(" + std::to_string(a) + "," + std::to_string(b) + ") overflows");
    return r.get_si();
}

namespace raw {

long long F(int n, int c, int m) {
    return binom(m + n + c, n + c) - ((c + 1) * binom(m + n - 1, n) + binom(m + n - 1, n - 1));
}

long long G(int t, int n, int c, int m) {
    return binom(m + n + c, n + c) -
           ((c + 2) * binom(m + n - 1, n) + binom(m + n - 1, n - 1) - binom(m + t - 3, t - 2));
}

long long H(int k, int n, int c, int m) {
    return binom(m + n + c, m) -
           ((c + k) * binom(m + n - 1, n) + (2 - k) * binom(m + n - 2, n - 1) + binom(m + n - 2, n - 2));
}

}  // namespace raw

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

std::string args(std::initializer_list<std::pair<const char*, long long>> kv) {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : kv) {
        os << (first ? "" : ",") << k << "=" << v;
        first = false;
    }
    return os.str();
}

}  // namespace

long long F(int n, int c, int m) {
    require(n >= 1 && c >= 1 && m >= 1, "F needs n>=1, c>=1, m>=1 (" + args({{"n", n}, {"c", c}, {"m", m}}) + ")");
    return raw::F(n, c, m);
}

long long G(int t, int n, int c, int m) {
    require(n >= 1 && c >= 1 && m >= 2, "G needs n>=1, c>=1, m>=2 (" + args({{"n", n}, {"c", c}, {"m", m}}) + ")");
    require(t >= 1 && t <= n + 1, "G needs 1 <= t <= n+1 (" + args({{"t", t}, {"n", n}}) + ")");
    return raw::G(t, n, c, m);
}

long long H(int k, int n, int c, int m) {
    require(n >= 1 && c >= 1 && m >= 1, "H needs n>=1, c>=1, m>=1 (" + args({{"n", n}, {"c", c}, {"m", m}}) + ")");
    require(k >= 1 && k <= c + 1, "H needs 1 <= k <= c+1 (" + args({{"k", k}, {"c", c}}) + ")");
    return raw::H(k, n, c, m);
}

long long u(int c, int g, int d, int m) {
    require(c >= 2 && g >= 0 && d >= c + 1 && m >= 1,
            "u needs c>=2, g>=0, d>=c+1, m>=1 (" + args({{"c", c}, {"g", g}, {"d", d}, {"m", m}}) + ")");
    return binom(c + 1 + m, m) - (static_cast<long long>(d) * m + 1 - g);
}

std::string to_string(Witness w) {
    switch (w) {
        case Witness::minimal_degree: return "minimal_degree";
        case Witness::del_pezzo_depth: return "del_pezzo_depth";
        case Witness::almost_minimal_depth_t: return "almost_minimal_depth_t";
        case Witness::acm_degree_c_plus_k: return "acm_degree_c_plus_k";
        case Witness::curve_genus_g_degree_d: return "curve_genus_g_degree_d";
        case Witness::unknown: return "unknown";
    }
    return "unknown";
}

DeltaAnswer delta_small(int n, int c, int m, int k) {
    require(n >= 1 && c >= 2 && m >= 2, "delta needs n>=1, c>=2, m>=2 (" + args({{"n", n}, {"c", c}, {"m", m}}) + ")");
    DeltaAnswer a;
    switch (k) {
        case 1:
            a.value = F(n, c, m);
            a.witness = Witness::minimal_degree;
            return a;
        case 2:
            a.value = G(n + 1, n, c, m);
            a.witness = Witness::del_pezzo_depth;
            a.depth = n + 1;
            return a;
        case 3:
            a.value = G(n, n, c, m);
            a.witness = Witness::almost_minimal_depth_t;
            a.depth = n;
            // at m = 2 arithmetically Cohen-Macaulay varieties of degree c+3 reach the same count
            if (m == 2) a.alt_witness = Witness::acm_degree_c_plus_k;
            return a;
        case 4: {
            if (n == 1) {
                std::string hint = m >= c ? "; use delta_curve(c, m, 4) for curves" : "";
                throw Unsupported("delta(k=4) with n=1 is not covered by the available theory" + hint);
            }
            if (m < 3) throw Unsupported("delta(k=4) needs m >= 3");
            const long long gv = G(n - 1, n, c, m);
            const long long hv = H(3, n, c, m);
            const long long disc = static_cast<long long>(m) * m + static_cast<long long>(m) * n -
                                   static_cast<long long>(n) * n - 5 * m - n + 6;
            if (disc >= 0) {
                a.value = gv;
                a.witness = Witness::almost_minimal_depth_t;
                a.depth = n - 1;
                if (disc == 0) {
                    a.tie = true;
                    a.alt_witness = Witness::acm_degree_c_plus_k;
                }
            } else {
                a.value = hv;
                a.witness = Witness::acm_degree_c_plus_k;
            }
            return a;
        }
        default:
            throw Unsupported("delta(k=" + std::to_string(k) + ") is not covered by the available theory");
    }
}

DeltaAnswer delta_curve(int c, int m, int k) {
    require(c >= 2, "delta_curve needs c >= 2");
    require(m >= c, "delta_curve needs m >= c (" + args({{"m", m}, {"c", c}}) + ")");
    const long long kmax = binom(c, 2) + c;
    require(k >= 1 && k <= kmax, "delta_curve needs 1 <= k <= " + std::to_string(kmax) + " (k=" + std::to_string(k) + ")");
    int j = 1;
    while (!(binom(j, 2) < k && k <= binom(j, 2) + j)) ++j;
    DeltaAnswer a;
    a.g = static_cast<int>(binom(j, 2) + j - k);
    a.d = c + j;
    a.value = u(c, a.g, a.d, m);
    a.witness = Witness::curve_genus_g_degree_d;
    return a;
}

namespace {

class Family {
public:
    explicit Family(std::string name) { r_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& where) {
        ++r_.checked;
        if (!ok && r_.pass) {
            r_.pass = false;
            r_.counterexample = where();
        }
    }
    IdentityResult result() const { return r_; }

private:
    IdentityResult r_;
};

std::string at(int n, int c, int m) { return "n=" + std::to_string(n) + " c=" + std::to_string(c) + " m=" + std::to_string(m); }

}  // namespace

std::vector<IdentityResult> identity_suite(int n_max, int c_max, int m_max) {
    Family f_rec("F recurrence"), g_rec("G_t recurrence"), fg_chain("F > G_{n+1} > ... > G_1"),
        h_rec("H_k recurrence"), coincide("H_1 = F, H_2 = G_{n+1}"), h_chain("H_1 > ... > H_c"),
        quad("G_n = H_3 at m = 2"), strict("G_n > H_3 for m >= 3"), diagram("F/G/H comparison diagram");

    for (int n = 1; n <= n_max; ++n)
        for (int c = 2; c <= c_max; ++c)
            for (int m = 2; m <= m_max; ++m) {
                auto w = [&] { return at(n, c, m); };
                f_rec.check(raw::F(n, c, m) == raw::F(n, c, m - 1) + raw::F(n - 1, c, m), w);
                // the hyperplane section of a depth-t variety has depth t-1
                for (int t = 1; t <= n + 1; ++t) {
                    const int ts = std::max(t - 1, 1);
                    g_rec.check(raw::G(t, n, c, m) == raw::G(t, n, c, m - 1) + raw::G(ts, n - 1, c, m),
                                [&] { return at(n, c, m) + " t=" + std::to_string(t); });
                }
                bool chain = raw::F(n, c, m) > raw::G(n + 1, n, c, m);
                for (int t = n + 1; t >= 2; --t) chain = chain && raw::G(t, n, c, m) > raw::G(t - 1, n, c, m);
                fg_chain.check(chain, w);
                for (int k = 1; k <= c + 1; ++k)
                    h_rec.check(raw::H(k, n, c, m) == raw::H(k, n, c, m - 1) + raw::H(k, n - 1, c, m),
                                [&] { return at(n, c, m) + " k=" + std::to_string(k); });
                coincide.check(raw::H(1, n, c, m) == raw::F(n, c, m) && raw::H(2, n, c, m) == raw::G(n + 1, n, c, m), w);
                bool hc = true;
                for (int k = 1; k < c; ++k) hc = hc && raw::H(k, n, c, m) > raw::H(k + 1, n, c, m);
                h_chain.check(hc, w);
                if (m == 2) quad.check(raw::G(n, n, c, m) == raw::H(3, n, c, m), w);
                if (m >= 3) strict.check(raw::G(n, n, c, m) > raw::H(3, n, c, m), w);

                bool dg = raw::H(1, n, c, m) == raw::F(n, c, m) && raw::H(2, n, c, m) == raw::G(n + 1, n, c, m);
                dg = dg && raw::F(n, c, m) > raw::G(n + 1, n, c, m);
                for (int k = 1; k <= c; ++k) dg = dg && raw::H(k, n, c, m) > raw::H(k + 1, n, c, m);
                for (int t = n + 1; t >= 2; --t) dg = dg && raw::G(t, n, c, m) > raw::G(t - 1, n, c, m);
                dg = dg && raw::H(3, n, c, m) <= raw::G(n, n, c, m);
                dg = dg && ((raw::H(3, n, c, m) == raw::G(n, n, c, m)) == (m == 2));
                diagram.check(dg, w);
            }

    return {f_rec.result(), g_rec.result(), fg_chain.result(), h_rec.result(), coincide.result(),
            h_chain.result(), quad.result(), strict.result(), diagram.result()};
}

std::vector<IdentityResult> specialization_suite(int n_max, int c_max, int cm_max) {
    Family castelnuovo("F(n,c,2) = C(c+1,2)"), fano("G_{n+1}(n,c,2) = C(c+1,2) - 1"),
        harris("F(1,c,m) = C(r+m,r) - (mr+1)"), lvovsky("G_2(1,c,m) = C(r+m,r) - m(r+1)");
    for (int n = 1; n <= n_max; ++n)
        for (int c = 2; c <= c_max; ++c) {
            auto w = [&] { return "n=" + std::to_string(n) + " c=" + std::to_string(c); };
            castelnuovo.check(F(n, c, 2) == binom(c + 1, 2), w);
            fano.check(G(n + 1, n, c, 2) == binom(c + 1, 2) - 1, w);
        }
    for (int c = 2; c <= cm_max; ++c)
        for (int m = 2; m <= cm_max; ++m) {
            const int r = c + 1;
            auto w = [&] { return "c=" + std::to_string(c) + " m=" + std::to_string(m); };
            harris.check(F(1, c, m) == binom(r + m, r) - (static_cast<long long>(m) * r + 1), w);
            lvovsky.check(G(2, 1, c, m) == binom(r + m, r) - static_cast<long long>(m) * (r + 1), w);
        }
    return {castelnuovo.result(), fano.result(), harris.result(), lvovsky.result()};
}

}  // namespace lowdeg
