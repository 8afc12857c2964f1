#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lowdeg/varieties.hpp"

namespace lowdeg {

/// Prime used for the fast Terracini pass when the variety is defined over Q.
constexpr std::uint64_t terracini_prime = 1000003;

/// Y = nu_2(X) in P^N, N = C(amb+2,2) - 1.
struct QuadraticEmbedding {
    ParamVariety base;
    /// coords[i] * coords[j] for i <= j, i major.
    std::vector<MPoly> coords2;
    std::size_t N = 0;
    /// N - a_2(X).
    std::size_t span_dim = 0;
};

/// Throws Unsupported for function-field curves.
QuadraticEmbedding veronese_square(const ParamVariety& v, std::uint64_t seed = default_seed);

struct SecantRank {
    std::size_t dim = 0;
    /// Same integer parameter points, ranked exactly over Q (only for varieties over Q).
    bool rational_confirmed = false;
};

/// dim S^k Y by Terracini: the span of the cone points and all parameter partials
/// of nu_2 o phi at k+1 random parameter points, maximized over trials.
/// Varieties over Q are evaluated at integer points modulo terracini_prime, and
/// `confirm` reranks the best trial over Q. Other fields must have p > 10^6.
SecantRank secant_dim(const QuadraticEmbedding& y, std::size_t k, int trials, std::uint64_t seed, bool confirm = false);

struct ZakChain {
    long long a2 = 0;
    long long middle = 0;
    long long right = 0;
    bool ok = false;
    bool equalities = false;
};

struct ZakInvariants {
    std::string label;
    std::size_t n = 0;
    std::size_t c = 0;
    int d = 0;
    long long a2 = 0;
    std::size_t span_dim = 0;
    /// s[k] = dim S^k Y for k = 0..k2.
    std::vector<std::size_t> s;
    /// delta[k] for k = 0..k2 (delta[0] = 0 by convention); zero beyond k2.
    std::vector<long long> delta;
    std::size_t ell2 = 0;
    std::size_t k2 = 0;
    long long delta2 = 0;
    bool zak4_ok = false;
    ZakChain chain;
    int trials = 0;
    std::uint64_t seed = 0;
    bool rational_confirmed = false;

    /// delta_k, zero for k > k2.
    long long delta_at(std::size_t k) const { return k < delta.size() ? delta[k] : 0; }
};

/// Secant dimensions up to k2 with the derived invariants. If the a_2 identity
/// fails the run is repeated once with doubled trials, then VerificationError.
ZakInvariants zak_invariants(const ParamVariety& v, int trials = 3, std::uint64_t seed = default_seed,
                             bool confirm = false);

/// {label, n, c, d, s, delta, ell2, k2, delta2, zak4_ok, trials, seed}; delta lists k = 1..k2.
std::string invariant_json(const ZakInvariants& z);

enum class Table2Row { minimal_degree, almost_minimal_depth1, almost_minimal_depth_n, del_pezzo, acm_degree_c3 };
std::string to_string(Table2Row r);

/// Expected (delta_{c+1}, ..., delta_{c+n+1}) of a row for dimension n.
std::vector<long long> table2_expected(Table2Row r, std::size_t n);

struct Table2Entry {
    std::size_t k = 0;
    long long expected = 0;
    long long computed = 0;
    bool match = false;
};

struct Table2Comparison {
    Table2Row row;
    std::vector<Table2Entry> entries;
    bool all_match = false;
};

Table2Comparison table2_row(const ZakInvariants& z, Table2Row row);

}  // namespace lowdeg
