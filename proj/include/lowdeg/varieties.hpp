#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lowdeg/matrix.hpp"
#include "lowdeg/mpoly.hpp"
#include "lowdeg/pointconfig.hpp"
#include "lowdeg/upoly.hpp"

namespace lowdeg {

/// Recipe that rebuilds a variety: constructor name plus integer parameters.
struct Construction {
    std::string name;
    std::map<std::string, long long> ints;
    std::map<std::string, std::vector<long long>> lists;
    /// Constructions this one is derived from (the source of a projection).
    std::vector<Construction> inner;
};

/// Affine model y^2 = f(x) with a basis of functions x^i y^j (j in {0,1})
/// regular away from the point at infinity.
struct FunctionFieldCurve {
    UPoly f;
    std::vector<std::pair<unsigned, unsigned>> basis;
    /// (amb+1) x basis.size(); coordinate k is sum_b coeffs(k,b) * basis_b.
    Matrix coeffs;
};

/// Projective variety X in P^amb given by a parametrization.
///
/// Polynomial kind: coords are polynomials in the concatenated variables of
/// `blocks`, homogeneous in each block (P^1 curves use blocks {2}).
/// Function-field kind: curves y^2 = f(x) with points enumerated over GF(p).
struct ParamVariety {
    std::size_t n = 1;
    std::size_t amb = 0;
    int d = 0;
    /// -1 when not applicable.
    int g = -1;
    std::string label;
    bool linearly_normal = false;
    Field field;
    std::vector<std::size_t> blocks;
    std::vector<MPoly> coords;
    std::optional<FunctionFieldCurve> ff;
    Construction construction;

    std::size_t c() const { return amb - n; }
    bool is_curve() const { return n == 1; }
    bool is_polynomial() const { return !ff.has_value(); }
    std::size_t nparams() const;
};

/// Linear subspace Lambda of P^ambient spanned by the basis vectors.
struct ProjectionCenter {
    ProjectionCenter(std::size_t ambient, std::vector<Point> basis);
    std::size_t ambient;
    std::vector<Point> basis;
    /// Projective dimension, basis count - 1.
    std::size_t dim;
};

constexpr std::uint64_t default_prime = 10007;
constexpr std::uint64_t default_seed = 42;

ParamVariety rational_normal_curve(std::size_t r, const Field& f);
ParamVariety scroll_surface(std::size_t a, std::size_t b, const Field& f);
ParamVariety veronese_surface(const Field& f);

/// Curve of class H + kF on S(a,b): the fiber coordinate [u:v] is set to
/// [beta(s,t) : alpha(s,t)] with random coprime forms of degrees b+k and a+k.
/// Degree a+b+k, genus 0. Retries with fresh randomness up to 8 times.
ParamVariety scroll_section_curve(std::size_t a, std::size_t b, std::size_t k, const Field& f, std::uint64_t seed);

/// Elliptic curve y^2 = x^3 + A x + B embedded by L((c+2)O) into P^{c+1}.
ParamVariety elliptic_normal_curve(std::size_t c, const Field& f, std::pair<long long, long long> ab = {1, 1});

/// Genus-2 curve y^2 = f(x), deg f = 5, embedded by L((c+3) inf) into P^{c+1}.
/// `fc` lists the coefficients of f from the constant term up.
ParamVariety hyperelliptic_g2_curve(std::size_t c, const Field& f,
                                    std::vector<long long> fc = {1, 1, 0, 0, 0, 1});

/// Linear projection from Lambda. Requires the image codimension to stay >= 2.
/// The image degree and injectivity are re-verified; failures throw VerificationError.
ParamVariety project(const ParamVariety& v, const ProjectionCenter& center);

/// Source curve of genus g and degree c+k-1 in P^{c+k-1-g} projected to P^{c+1}
/// from a general (k-3-g)-plane inside the span of k-g points of the curve.
ParamVariety multisecant_projection(std::size_t c, std::size_t k, std::size_t g, const Field& f, std::uint64_t seed);

/// RNC(r) projected from a random point of P^r to P^{r-1}; r >= 4.
ParamVariety projected_rnc(std::size_t r, const Field& f, std::uint64_t seed);

/// Genus-0 witness of degree d in P^{c+1} from the scroll S(c+k-d, d-k), class H + (d-c)F.
ParamVariety genus_zero_scroll_curve(std::size_t c, std::size_t k, std::size_t d, const Field& f, std::uint64_t seed);

/// A general curve section of a surface as a P^1-parametrized curve in the same ambient space;
/// curves are returned unchanged.
ParamVariety section_curve(const ParamVariety& v, std::uint64_t seed);

/// `count` distinct points of V, deterministic in the seed. Throws FieldTooSmall
/// when the field cannot supply them.
PointConfig sample_points(const ParamVariety& v, std::size_t count, std::uint64_t seed);

/// Values of the coordinates at a parameter point (polynomial kind).
Point eval_coords(const ParamVariety& v, std::span<const Scalar> params);

/// Hyperplane pullback for a function-field curve: h = a(x) + b(x) y.
std::pair<UPoly, UPoly> hyperplane_pullback(const ParamVariety& v, std::span<const Scalar> lambda);

struct DegreeCheck {
    bool ok = false;
    std::vector<int> root_counts;
    std::string detail;
};

/// Numerical degree certificate for curves: distinct roots of random hyperplane
/// pullbacks over the algebraic closure (never above d, equal to d in some trial),
/// plus, for P^1-parametrized curves, no base points and a generic fiber of size one.
DegreeCheck verify_curve_degree(const ParamVariety& v, std::uint64_t seed, int trials = 5);

/// Rank of the coordinate functions as a linear system (amb + 1 when nondegenerate).
std::size_t coordinate_rank(const ParamVariety& v);

/// Deterministic descriptor JSON: label, n, c, d, g, field, seed and construction.
std::string descriptor_json(const ParamVariety& v);
/// Runs the recorded construction again over another field, with the same seeds.
ParamVariety rebuild_over(const ParamVariety& v, const Field& f);
/// Rebuilds a variety from descriptor_json output.
ParamVariety from_descriptor(const std::string& json);

}  // namespace lowdeg
