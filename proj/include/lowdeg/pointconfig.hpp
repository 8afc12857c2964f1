#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lowdeg/mpoly.hpp"
#include "lowdeg/scalar.hpp"

namespace lowdeg {

using Point = std::vector<Scalar>;

/// Finite set of distinct points of P^c over one field. Coordinates are
/// normalized so the first nonzero entry is 1.
class PointConfig {
public:
    /// Throws DomainError on zero vectors, wrong lengths or repeated points.
    PointConfig(const Field& f, std::size_t c, std::vector<Point> points);

    static PointConfig from_integers(const Field& f, std::size_t c, const std::vector<std::vector<long long>>& pts);
    /// The c+1 coordinate points e_0..e_c.
    static PointConfig coordinate_points(const Field& f, std::size_t c);

    const Field& field() const { return field_; }
    std::size_t c() const { return c_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& point(std::size_t i) const { return points_.at(i); }

    PointConfig subset(const std::vector<std::size_t>& indices) const;
    PointConfig without(std::size_t index) const;

    friend bool operator==(const PointConfig&, const PointConfig&) = default;

private:
    Field field_;
    std::size_t c_;
    std::vector<Point> points_;
};

/// Scales a nonzero vector so its first nonzero coordinate is 1.
Point normalize_point(Point p);

/// Dimension of the linear span (rank of the coordinate matrix minus 1).
std::size_t span_dim(const PointConfig& g);
/// Values of the monomials at p.
std::vector<Scalar> monomial_row(const Point& p, const std::vector<Exponent>& mons);
/// Number of conditions imposed on degree-m forms.
std::size_t hilbert(const PointConfig& g, unsigned m);
/// Dimension of degree-m forms vanishing on the points.
std::size_t h0_ideal(const PointConfig& g, unsigned m);
/// Least r >= 1 with hilbert(g, r-1) = |g|.
std::size_t regularity(const PointConfig& g);

struct NuVector {
    /// nu(i) for i = 0.., up to the span dimension minus one. When the count is
    /// not constant over independent (i+1)-subsets the smallest count is stored.
    std::vector<std::size_t> values;
    bool semi_uniform = true;
};

constexpr std::size_t default_nu_cap = 16;

/// Enumerates spans of independent (i+1)-subsets, i = 0..c-1, and counts the
/// points each contains. Throws ComplexityRefusal above `cap` points.
NuVector nu_vector(const PointConfig& g, std::size_t cap = default_nu_cap);

struct ExtractOptions {
    /// Maximum subsets examined by the exhaustive phase.
    std::size_t budget = 200000;
    std::size_t nu_cap = default_nu_cap;
};

struct ThreeRegularSubset {
    PointConfig points;
    std::vector<std::size_t> indices;
    std::size_t regularity = 0;
    /// "spanning-greedy", "coordinate-frame" or "exhaustive".
    std::string phase;
    std::size_t candidates_tried = 0;
    /// Result of the semi-uniform position check; empty when the input exceeds the cap.
    std::optional<bool> semi_uniform;
};

/// Spanning 3-regular subset of 2c+1 points. Candidates are tried in a fixed
/// order: the greedy spanning basis plus the next c points by index; then the
/// basis plus the c points of smallest support in the basis' coordinate frame;
/// then all (2c+1)-subsets in lexicographic index order. Every candidate is
/// certified by span_dim = c and hilbert(., 2) = 2c+1.
/// Throws DomainError on bad input and ConstructionError when the search fails.
ThreeRegularSubset extract_three_regular(const PointConfig& g, const ExtractOptions& opt = {});

/// True iff some degree-m form vanishes on all points but the given one.
bool separates_point(const PointConfig& g, std::size_t index, unsigned m);

/// Text format: "field <p>|Q", "<c> <npoints>", then one line of c+1 integers per point; "#" starts a comment.
PointConfig read_points(std::istream& in);
PointConfig read_points_file(const std::string& path);
void write_points(std::ostream& out, const PointConfig& g);

}  // namespace lowdeg
