#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lowdeg/scalar.hpp"

namespace lowdeg {

using Exponent = std::vector<unsigned>;

/// All degree-m exponent vectors in v variables, graded-lex: lexicographically
/// descending within the single degree, so x0^m comes first and x_{v-1}^m last.
/// Length C(v-1+m, m).
std::vector<Exponent> monomials(std::size_t v, unsigned m);

/// Sparse multivariate polynomial with coefficients in one field.
class MPoly {
public:
    MPoly(const Field& f, std::size_t nvars);

    static MPoly constant(const Field& f, std::size_t nvars, const Scalar& c);
    static MPoly variable(const Field& f, std::size_t nvars, std::size_t i);
    static MPoly monomial(const Field& f, Exponent e, const Scalar& c);

    std::size_t nvars() const { return nvars_; }
    const Field& field() const { return field_; }
    const std::map<Exponent, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int total_degree() const;
    /// Coefficient of x^e (zero when absent).
    Scalar coeff(const Exponent& e) const;

    /// Adds c * x^e, dropping the term if it cancels.
    void add_term(const Exponent& e, const Scalar& c);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Scalar& s);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const Scalar& s) { return a *= s; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly pow(unsigned e) const;

    Scalar eval(std::span<const Scalar> point) const;
    MPoly diff(std::size_t var) const;
    /// Substitutes subs[i] for x_i; all substitutes share a variable count.
    MPoly compose(const std::vector<MPoly>& subs) const;

    friend bool operator==(const MPoly& a, const MPoly& b) = default;

    std::string to_string() const;

private:
    void check(const MPoly& o, const char* op) const;

    Field field_;
    std::size_t nvars_;
    std::map<Exponent, Scalar> terms_;
};

Scalar poly_eval(const MPoly& f, std::span<const Scalar> point);
MPoly poly_diff(const MPoly& f, std::size_t var);

/// Value of the monomial x^e at a point.
Scalar monomial_value(const Exponent& e, std::span<const Scalar> point);

}  // namespace lowdeg
