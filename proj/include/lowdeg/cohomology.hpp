#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lowdeg/varieties.hpp"

namespace lowdeg {

struct AmResult {
    long long value = 0;
    /// Rank of the evaluation matrix, the Hilbert function h_X(m).
    std::size_t rank = 0;
    std::size_t samples = 0;
    /// False for the exact curve mode, true when found by rank stabilization.
    bool stabilized = false;
};

/// h^0(I_X(m)). Curves: exact from m*d + 1 distinct points. Higher dimension:
/// batches of 2x(matrix width) samples until three batches add no rank.
AmResult a_m_detail(const ParamVariety& v, unsigned m, std::uint64_t seed = default_seed);
long long a_m(const ParamVariety& v, unsigned m, std::uint64_t seed = default_seed);

/// h^1(I_C(m)) = a_m - u(c,g,d,m). Throws Unsupported when d > 2c+1.
long long h1_ideal(const ParamVariety& v, unsigned m, std::uint64_t seed = default_seed);

struct DeficiencyProfile {
    std::size_t c = 0;
    int d = 0;
    int g = 0;
    /// Entries for m = 1 up to and including the first m with h1(m) = 0.
    std::map<unsigned, long long> a;
    std::map<unsigned, long long> u;
    std::map<unsigned, long long> h1;
    std::size_t reg = 0;

    bool linearly_normal() const { return h1.at(1) == 0; }
    /// "(4,4,2,1)"; "()" for the zero profile.
    std::string nonzero_string() const;
};

DeficiencyProfile deficiency_profile(const ParamVariety& v, std::uint64_t seed = default_seed);
/// Same profile from explicit h1 values (m = 1..), used for hypothetical inputs.
DeficiencyProfile profile_from_h1(std::size_t c, int d, int g, const std::vector<long long>& h1);

enum class CheckStatus { holds, fails, hypothesis_violated };
std::string to_string(CheckStatus s);

struct CheckResult {
    CheckStatus status = CheckStatus::holds;
    std::string detail;
    /// The equality case of the regularity bound.
    bool equality = false;
};

/// h1(m-1) > h1(m) for 2 <= m <= reg-1. Needs d <= 2c and a non-linearly-normal curve.
CheckResult verify_monotonic(const DeficiencyProfile& p);
/// reg <= d-c+1-g; at equality also h1(m) = d-c-g-m for 1 <= m <= d-c-g.
CheckResult verify_reg_bound(const DeficiencyProfile& p);

struct A2Classification {
    long long a2 = 0;
    /// From a_2 = C(c+1,2) + 1 - k.
    int k = 0;
    long long h1_2 = 0;
    /// 2(d-c) - 1 - g - k.
    long long predicted_h1_2 = 0;
    /// h1(2) equals the predicted value, as forced by a_2 = C(c+1,2) + 1 - k.
    bool identity_holds = false;
    std::string case_name;
};

/// Throws DomainError when k > c.
A2Classification classify_a2_curve(const ParamVariety& v, std::uint64_t seed = default_seed);

struct BoundResult {
    long long a = 0;
    long long bound = 0;
    bool holds = false;
    bool equality = false;
};

/// a_m(V) <= H_k(n,c,m). Needs d >= c+k and 1 <= k <= c+1.
BoundResult bound_check(const ParamVariety& v, unsigned m, int k, std::uint64_t seed = default_seed);

struct SectionResult {
    long long a2 = 0;
    /// Quadrics through a general codimension-n linear section, inside that P^c.
    long long section_a2 = 0;
    bool holds = false;
};

/// a_2(V) <= h^0(I_{V cap L}(2)) for a general linear space L of codimension n.
SectionResult section_check(const ParamVariety& v, std::uint64_t seed = default_seed);

/// Columns m,a_m,u,h1 with a header line.
std::string profile_csv(const DeficiencyProfile& p);

}  // namespace lowdeg
