#include "lowdeg/upoly.hpp"

#include <sstream>

#include "lowdeg/error.hpp"

namespace lowdeg {

UPoly::UPoly(const Field& f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (const auto& x : c_)
        if (!(x.field() == field_)) throw FieldMismatch("polynomial coefficient in " + x.field().to_string());
    trim();
}

UPoly UPoly::constant(const Field& f, const Scalar& c) { return UPoly(f, {c}); }

UPoly UPoly::linear_root(const Field& f, const Scalar& a) { return UPoly(f, {-a, Scalar::one(f)}); }

UPoly UPoly::from_integers(const Field& f, const std::vector<long long>& coeffs) {
    std::vector<Scalar> c;
    for (long long v : coeffs) c.push_back(Scalar::from_int(f, v));
    return UPoly(f, std::move(c));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }

Scalar UPoly::lead() const { return c_.empty() ? Scalar::zero(field_) : c_.back(); }

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("polynomial addition");
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(a.field_, std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("polynomial product");
    if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(a.field_, std::move(c));
}

UPoly operator*(const UPoly& a, const Scalar& s) {
    UPoly r = a;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
}

Scalar UPoly::eval(const Scalar& x) const {
    Scalar r = Scalar::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly UPoly::derivative() const {
    std::vector<Scalar> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * Scalar::from_int(field_, static_cast<long long>(i)));
    return UPoly(field_, std::move(c));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

std::string UPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].to_string();
        if (i >= 1) os << "*t";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("polynomial division");
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const Field& f = a.field();
    std::vector<Scalar> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(f), a};
    std::vector<Scalar> q(a.degree() - db + 1, Scalar::zero(f));
    const Scalar inv = b.lead().inverse();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i].is_zero()) continue;
        Scalar factor = r[i] * inv;
        q[i - db] = factor;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= factor * b.coeffs()[j];
    }
    r.resize(db);
    return {UPoly(f, std::move(q)), UPoly(f, std::move(r))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    const Field& f = m.field();
    UPoly r0 = m, r1 = a % m;
    UPoly s0(f), s1 = UPoly::constant(f, Scalar::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw DomainError("polynomial is not invertible modulo the given modulus");
    return (s0 * r0.lead().inverse()) % m;
}

int distinct_root_count(const UPoly& f) {
    if (f.is_zero()) throw DomainError("zero polynomial has infinitely many roots");
    if (f.degree() <= 0) return 0;
    UPoly g = gcd(f, f.derivative());
    return f.degree() - g.degree();
}

}  // namespace lowdeg
