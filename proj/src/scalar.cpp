#include "lowdeg/scalar.hpp"

#include <array>

#include "lowdeg/error.hpp"

namespace lowdeg {

namespace {

bool miller_rabin(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are a deterministic witness set for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = modp::pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = modp::mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) { return miller_rabin(n); }

Field Field::prime(std::uint64_t p, PrimeCheck check) {
    if (p < 2 || p >= max_modulus) {
        throw DomainError("prime modulus must lie in [2, 2^62), got " + std::to_string(p));
    }
    bool must_check = p < (std::uint64_t{1} << 31) || check == PrimeCheck::verify;
    if (must_check && !is_prime_u64(p)) {
        throw DomainError("modulus " + std::to_string(p) + " is not prime");
    }
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::to_string() const { return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")"; }

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DomainError("division by zero in GF(" + std::to_string(p) + ")");
    return pow(a, p - 2, p);
}

std::uint64_t reduce(long long v, std::uint64_t p) {
    if (v >= 0) return static_cast<std::uint64_t>(v) % p;
    // -(v+1) avoids overflow at LLONG_MIN
    std::uint64_t m = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p;
    return m == 0 ? 0 : p - m;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
    mpz_class r;
    mpz_class pm;
    mpz_import(pm.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return count == 0 ? 0 : out;
}

}  // namespace modp

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long v) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.value_ = mpq_class(mpz_class(static_cast<signed long>(v)));
    } else {
        s.value_ = modp::reduce(v, f.modulus());
    }
    return s;
}

Scalar Scalar::from_mpz(const Field& f, const mpz_class& v) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.value_ = mpq_class(v);
    } else {
        s.value_ = modp::reduce(v, f.modulus());
    }
    return s;
}

Scalar Scalar::fraction(const Field& f, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("zero denominator");
    if (f.is_rational()) {
        Scalar s;
        s.field_ = f;
        mpq_class q(num, den);
        q.canonicalize();
        s.value_ = std::move(q);
        return s;
    }
    return from_mpz(f, num) / from_mpz(f, den);
}

Scalar Scalar::residue(const Field& f, std::uint64_t r) {
    if (!f.is_prime()) throw DomainError("residue constructor needs a prime field");
    Scalar s;
    s.field_ = f;
    s.value_ = r % f.modulus();
    return s;
}

bool Scalar::is_zero() const {
    if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
    if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw FieldMismatch("rational value requested from " + field_.to_string());
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime()) throw FieldMismatch("residue requested from Q");
    return std::get<std::uint64_t>(value_);
}

void Scalar::check_same_field(const Scalar& o, const char* op) const {
    if (!(field_ == o.field_)) {
        throw FieldMismatch(std::string(op) + " between " + field_.to_string() + " and " + o.field_.to_string());
    }
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational()) {
        std::get<mpq_class>(s.value_) = -std::get<mpq_class>(value_);
    } else {
        auto r = std::get<std::uint64_t>(value_);
        std::get<std::uint64_t>(s.value_) = r == 0 ? 0 : field_.modulus() - r;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o, "addition");
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = modp::add(r, std::get<std::uint64_t>(o.value_), field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o, "subtraction");
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = modp::sub(r, std::get<std::uint64_t>(o.value_), field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o, "multiplication");
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = modp::mul(r, std::get<std::uint64_t>(o.value_), field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o, "division");
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    Scalar s = *this;
    if (field_.is_rational()) {
        std::get<mpq_class>(s.value_) = 1 / std::get<mpq_class>(value_);
    } else {
        std::get<std::uint64_t>(s.value_) = modp::inv(std::get<std::uint64_t>(value_), field_.modulus());
    }
    return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
    if (field_.is_prime()) {
        return residue(field_, modp::pow(std::get<std::uint64_t>(value_), e, field_.modulus()));
    }
    Scalar r = one(field_);
    Scalar b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (auto c = a.field_.modulus() <=> b.field_.modulus(); c != 0) return c;
    if (a.field_.is_prime()) return std::get<std::uint64_t>(a.value_) <=> std::get<std::uint64_t>(b.value_);
    int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
    if (field_.is_prime()) return std::to_string(std::get<std::uint64_t>(value_));
    return std::get<mpq_class>(value_).get_str();
}

}  // namespace lowdeg
