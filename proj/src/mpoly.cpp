#include "lowdeg/mpoly.hpp"

#include <numeric>
#include <sstream>

#include "lowdeg/error.hpp"

namespace lowdeg {

namespace {

void monomials_rec(std::size_t v, unsigned m, std::size_t i, Exponent& cur, std::vector<Exponent>& out) {
    if (i + 1 == v) {
        cur[i] = m;
        out.push_back(cur);
        return;
    }
    for (unsigned e = m + 1; e-- > 0;) {
        cur[i] = e;
        monomials_rec(v, m - e, i + 1, cur, out);
    }
}

}  // namespace

std::vector<Exponent> monomials(std::size_t v, unsigned m) {
    if (v == 0) throw DomainError("monomials need at least one variable");
    std::vector<Exponent> out;
    Exponent cur(v, 0);
    monomials_rec(v, m, 0, cur, out);
    return out;
}

Scalar monomial_value(const Exponent& e, std::span<const Scalar> point) {
    if (e.size() != point.size()) throw DomainError("point length does not match variable count");
    Scalar r = Scalar::one(point.empty() ? Field::rationals() : point[0].field());
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) r *= point[i].pow(e[i]);
    return r;
}

MPoly::MPoly(const Field& f, std::size_t nvars) : field_(f), nvars_(nvars) {}

MPoly MPoly::constant(const Field& f, std::size_t nvars, const Scalar& c) {
    MPoly p(f, nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(const Field& f, std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DomainError("variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(f, std::move(e), Scalar::one(f));
}

MPoly MPoly::monomial(const Field& f, Exponent e, const Scalar& c) {
    MPoly p(f, e.size());
    p.add_term(e, c);
    return p;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    return d;
}

Scalar MPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void MPoly::add_term(const Exponent& e, const Scalar& c) {
    if (e.size() != nvars_) throw DomainError("exponent length does not match variable count");
    if (!(c.field() == field_)) throw FieldMismatch("coefficient in " + c.field().to_string());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MPoly::check(const MPoly& o, const char* op) const {
    if (!(field_ == o.field_)) throw FieldMismatch(std::string("polynomial ") + op);
    if (nvars_ != o.nvars_) throw DomainError(std::string("polynomial ") + op + " with different variable counts");
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check(o, "addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check(o, "subtraction");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const Scalar& s) {
    if (!(s.field() == field_)) throw FieldMismatch("polynomial scaling");
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check(b, "product");
    MPoly r(a.field_, a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = constant(field_, nvars_, Scalar::one(field_));
    MPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Scalar MPoly::eval(std::span<const Scalar> point) const {
    if (point.size() != nvars_) throw DomainError("point length does not match variable count");
    for (const auto& x : point)
        if (!(x.field() == field_)) throw FieldMismatch("evaluation point in " + x.field().to_string());
    Scalar r = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) r += c * monomial_value(e, point);
    return r;
}

MPoly MPoly::diff(std::size_t var) const {
    if (var >= nvars_) throw DomainError("differentiation variable out of range");
    MPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent e2 = e;
        --e2[var];
        r.add_term(e2, c * Scalar::from_int(field_, e[var]));
    }
    return r;
}

MPoly MPoly::compose(const std::vector<MPoly>& subs) const {
    if (subs.size() != nvars_) throw DomainError("compose needs one substitute per variable");
    if (subs.empty()) return *this;
    const std::size_t nv = subs[0].nvars();
    // cache powers per variable
    std::vector<std::vector<MPoly>> powers(nvars_);
    MPoly r(field_, nv);
    for (const auto& [e, c] : terms_) {
        MPoly t = constant(field_, nv, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(field_, nv, Scalar::one(field_)));
            while (pw.size() <= e[i]) pw.push_back(pw.back() * subs[i]);
            t = t * pw[e[i]];
        }
        r += t;
    }
    return r;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.to_string();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (it->first[i] == 0) continue;
            os << "*x" << i;
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

Scalar poly_eval(const MPoly& f, std::span<const Scalar> point) { return f.eval(point); }
MPoly poly_diff(const MPoly& f, std::size_t var) { return f.diff(var); }

}  // namespace lowdeg
