#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lowdeg {

/// C(a,b), zero when b < 0 or a < b. Throws DomainError if the value overflows 63 bits.
long long binom(long long a, long long b);

/// Upper bound for a_m of a minimal-degree variety. n >= 1, c >= 1, m >= 1.
long long F(int n, int c, int m);
/// a_m of a degree c+2 variety of arithmetic depth t. 1 <= t <= n+1, c >= 1, m >= 2.
long long G(int t, int n, int c, int m);
/// a_m of an arithmetically Cohen-Macaulay variety of degree c+k. 1 <= k <= c+1.
long long H(int k, int n, int c, int m);
/// Expected a_m of a linearly normal curve of genus g and degree d in P^{c+1}.
long long u(int c, int g, int d, int m);

/// Closed forms without range checks; n = 0 is allowed so recurrences can be tested.
namespace raw {
long long F(int n, int c, int m);
long long G(int t, int n, int c, int m);
long long H(int k, int n, int c, int m);
}  // namespace raw

enum class Witness {
    minimal_degree,
    del_pezzo_depth,
    almost_minimal_depth_t,
    acm_degree_c_plus_k,
    curve_genus_g_degree_d,
    unknown,
};

std::string to_string(Witness w);

struct DeltaAnswer {
    long long value = 0;
    Witness witness = Witness::unknown;
    /// Second family attaining the same value (k=3 at m=2) or a tie at k=4.
    std::optional<Witness> alt_witness;
    bool tie = false;
    /// Depth of the almost-minimal witness when witness is almost_minimal_depth_t.
    int depth = 0;
    /// Witness curve data for delta_curve.
    int g = -1;
    int d = -1;
};

/// Maximal a_m for varieties of degree >= c+k, for the cases the theory settles.
/// Throws Unsupported for combinations outside them.
DeltaAnswer delta_small(int n, int c, int m, int k);

/// Maximal a_m for curves in P^{c+1}, m >= c, 1 <= k <= C(c,2)+c.
DeltaAnswer delta_curve(int c, int m, int k);

struct IdentityResult {
    std::string name;
    bool pass = true;
    long long checked = 0;
    std::string counterexample;
};

/// Checks the recurrences, orderings and coincidences among F, G_t, H_k over
/// 1 <= n <= n_max, 2 <= c <= c_max, 2 <= m <= m_max. One entry per family.
std::vector<IdentityResult> identity_suite(int n_max, int c_max, int m_max);

/// Classical specializations: Castelnuovo and Fano values at m = 2 on the
/// identity grid, Harris and L'vovsky bounds for curves with c, m <= cm_max.
std::vector<IdentityResult> specialization_suite(int n_max, int c_max, int cm_max);

}  // namespace lowdeg
