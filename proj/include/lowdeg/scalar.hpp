#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace lowdeg {

enum class PrimeCheck {
    verify,   ///< run a deterministic primality test
    trusted,  ///< skip the test for moduli >= 2^31 (smaller moduli are always checked)
};

/// Ground field descriptor: the rationals or a prime field GF(p) with p < 2^62.
class Field {
public:
    static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 62;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p, PrimeCheck check = PrimeCheck::verify);

    bool is_rational() const { return p_ == 0; }
    bool is_prime() const { return p_ != 0; }
    /// 0 for the rationals.
    std::uint64_t modulus() const { return p_; }
    /// "Q" or "GF(p)".
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

namespace modp {
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Inverse of a nonzero residue.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
/// Reduce a signed integer into [0, p).
std::uint64_t reduce(long long v, std::uint64_t p);
std::uint64_t reduce(const mpz_class& v, std::uint64_t p);
}  // namespace modp

/// Exact field element: a reduced rational or a residue modulo the field's prime.
///
/// Arithmetic between elements of different fields throws FieldMismatch.
class Scalar {
public:
    /// Zero of the rationals.
    Scalar() = default;

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long long v);
    static Scalar from_mpz(const Field& f, const mpz_class& v);
    /// num/den over the rationals, or num * den^-1 in a prime field.
    static Scalar fraction(const Field& f, const mpz_class& num, const mpz_class& den);
    /// Residue constructor for prime fields; `r` is reduced mod p.
    static Scalar residue(const Field& f, std::uint64_t r);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Requires a rational element.
    const mpq_class& rational() const;
    /// Requires a prime-field element.
    std::uint64_t residue() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;

    /// Elements of different fields compare unequal.
    friend bool operator==(const Scalar& a, const Scalar& b);
    /// Total order (field first, then value); used for canonical containers only.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    void check_same_field(const Scalar& o, const char* op) const;

    Field field_;
    std::variant<mpq_class, std::uint64_t> value_{mpq_class(0)};
};

}  // namespace lowdeg
