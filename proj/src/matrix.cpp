#include "lowdeg/matrix.hpp"

#include <algorithm>
#include <utility>

#include "lowdeg/error.hpp"

namespace lowdeg {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(f), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw DomainError("matrix entry count " + std::to_string(entries_.size()) + " != " + std::to_string(rows) +
                          "x" + std::to_string(cols));
    }
    for (const auto& e : entries_) {
        if (!(e.field() == field_)) {
            throw FieldMismatch("matrix over " + field_.to_string() + " has an entry in " + e.field().to_string());
        }
    }
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar::one(f);
    return m;
}

Matrix Matrix::from_integers(const Field& f, const std::vector<std::vector<long long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Scalar> e;
    e.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DomainError("ragged integer matrix");
        for (long long v : r) e.push_back(Scalar::from_int(f, v));
    }
    return Matrix(f, rows.size(), cols, std::move(e));
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    std::vector<Scalar> e;
    e.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DomainError("ragged matrix rows");
        e.insert(e.end(), r.begin(), r.end());
    }
    return Matrix(f, rows.size(), cols, std::move(e));
}

void Matrix::set(std::size_t i, std::size_t j, Scalar v) {
    if (!(v.field() == field_)) throw FieldMismatch("set entry of " + v.field().to_string() + " in " + field_.to_string());
    entries_[i * cols_ + j] = std::move(v);
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("matrix product");
    if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.entries_[i * o.cols_ + j] += a * o.at(k, j);
        }
    return r;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector shape mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

namespace {

std::size_t rank_modp(const Matrix& m) {
    const std::uint64_t p = m.field().modulus();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) a[i] = m.entries()[i].residue();

    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
        std::uint64_t* pr = a.data() + r * cols;
        const std::uint64_t inv = modp::inv(pr[col], p);
        for (std::size_t j = col; j < cols; ++j) pr[j] = modp::mul(pr[j], inv, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::uint64_t* ri = a.data() + i * cols;
            const std::uint64_t f = ri[col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                if (pr[j]) ri[j] = modp::sub(ri[j], modp::mul(f, pr[j], p), p);
            }
        }
        ++r;
    }
    return r;
}

// Bareiss elimination on the integer matrix obtained by clearing row denominators.
std::size_t rank_rational(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            const mpq_class& q = m.at(i, j).rational();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const mpq_class& q = m.at(i, j).rational();
            a[i * cols + j] = q.get_num() * (l / q.get_den());
        }
    }

    mpz_class prev = 1;
    mpz_class tmp;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && sgn(a[piv * cols + col]) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
        const mpz_class& pv = a[r * cols + col];
        for (std::size_t i = r + 1; i < rows; ++i) {
            mpz_class& lead = a[i * cols + col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class& x = a[i * cols + j];
                x *= pv;
                tmp = lead * a[r * cols + j];
                x -= tmp;
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = pv;
        ++r;
    }
    return r;
}

// Reduced row echelon form in place, pivoting only in the first `cols` columns; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][col].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        Scalar inv = a[r][col].inverse();
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][col].is_zero()) continue;
            Scalar f = a[i][col];
            for (std::size_t j = col; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return m.field().is_prime() ? rank_modp(m) : rank_rational(m);
}

std::size_t kernel_dim(const Matrix& m) { return m.cols() - rank(m); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    const std::size_t cols = m.cols();
    std::vector<std::vector<Scalar>> a;
    a.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) a.emplace_back(m.row(i).begin(), m.row(i).end());
    auto pivots = rref(a, cols);

    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols, Scalar::zero(m.field()));
        v[free] = Scalar::one(m.field());
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Scalar>> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i].assign(m.row(i).begin(), m.row(i).end());
        for (std::size_t j = 0; j < n; ++j) a[i].push_back(i == j ? Scalar::one(m.field()) : Scalar::zero(m.field()));
    }
    auto pivots = rref(a, n);
    if (pivots.size() != n) throw DomainError("matrix is singular");
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, a[i][n + j]);
    return inv;
}

EchelonBasis::EchelonBasis(const Field& f, std::size_t cols) : field_(f), cols_(cols) {}

bool EchelonBasis::add(std::span<const Scalar> row) {
    if (row.size() != cols_) throw DomainError("echelon row length mismatch");
    std::vector<Scalar> v(row.begin(), row.end());
    for (const auto& x : v)
        if (!(x.field() == field_)) throw FieldMismatch("echelon row entry");
    if (field_.is_prime()) return add_modp(row);
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const Scalar f = v[pivots_[k]];
        if (f.is_zero()) continue;
        const auto& b = rows_[k];
        for (std::size_t j = pivots_[k]; j < cols_; ++j)
            if (!b[j].is_zero()) v[j] -= f * b[j];
    }
    std::size_t lead = 0;
    while (lead < cols_ && v[lead].is_zero()) ++lead;
    if (lead == cols_) return false;
    Scalar inv = v[lead].inverse();
    for (std::size_t j = lead; j < cols_; ++j) v[j] *= inv;
    // keep earlier rows reduced in the new pivot column so later reductions stay one pass
    for (auto& b : rows_) {
        const Scalar f = b[lead];
        if (f.is_zero()) continue;
        for (std::size_t j = lead; j < cols_; ++j) b[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
}

bool EchelonBasis::contains(std::span<const Scalar> row) const {
    EchelonBasis copy = *this;
    return !copy.add(row);
}

bool EchelonBasis::add_modp(std::span<const Scalar> row) {
    const std::uint64_t p = field_.modulus();
    std::vector<std::uint64_t> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = row[j].residue();
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const std::uint64_t f = v[pivots_[k]];
        if (f == 0) continue;
        const auto& b = prows_[k];
        for (std::size_t j = pivots_[k]; j < cols_; ++j)
            if (b[j]) v[j] = modp::sub(v[j], modp::mul(f, b[j], p), p);
    }
    std::size_t lead = 0;
    while (lead < cols_ && v[lead] == 0) ++lead;
    if (lead == cols_) return false;
    const std::uint64_t inv = modp::inv(v[lead], p);
    for (std::size_t j = lead; j < cols_; ++j) v[j] = modp::mul(v[j], inv, p);
    for (auto& b : prows_) {
        const std::uint64_t f = b[lead];
        if (f == 0) continue;
        for (std::size_t j = lead; j < cols_; ++j)
            if (v[j]) b[j] = modp::sub(b[j], modp::mul(f, v[j], p), p);
    }
    prows_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
}

}  // namespace lowdeg
