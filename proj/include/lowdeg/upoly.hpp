#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lowdeg/scalar.hpp"

namespace lowdeg {

/// Dense univariate polynomial, coefficient i multiplies t^i. No trailing zeros.
class UPoly {
public:
    explicit UPoly(const Field& f) : field_(f) {}
    UPoly(const Field& f, std::vector<Scalar> coeffs);

    static UPoly constant(const Field& f, const Scalar& c);
    /// t - a
    static UPoly linear_root(const Field& f, const Scalar& a);
    static UPoly from_integers(const Field& f, const std::vector<long long>& coeffs);

    const Field& field() const { return field_; }
    /// -1 for zero.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(std::size_t i) const;
    Scalar lead() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const Scalar& s);
    friend bool operator==(const UPoly& a, const UPoly& b) = default;

    Scalar eval(const Scalar& x) const;
    UPoly derivative() const;
    UPoly monic() const;

    std::string to_string() const;

private:
    void trim();

    Field field_;
    std::vector<Scalar> c_;
};

/// Quotient and remainder; throws DomainError on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
UPoly inverse_mod(const UPoly& a, const UPoly& m);
/// Degree of the squarefree part, i.e. the number of distinct roots over the
/// algebraic closure. Valid when the field characteristic exceeds the degree.
int distinct_root_count(const UPoly& f);

}  // namespace lowdeg
