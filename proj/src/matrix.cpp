#include "edmcp/matrix.hpp"

#include <algorithm>

namespace edmcp {

DimensionMismatch::DimensionMismatch(std::size_t a, std::size_t b, const std::string& where)
    : std::invalid_argument(where + ": dimension mismatch (" + std::to_string(a) + " vs " +
                            std::to_string(b) + ")") {}

SymMatrix SymMatrix::identity(std::size_t dim) {
    SymMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.data_[i * dim + i] = 1;
    return m;
}

SymMatrix SymMatrix::from_function(std::size_t dim,
                                   const std::function<Scalar(std::size_t, std::size_t)>& f) {
    SymMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) m.set(i, j, f(i, j));
    return m;
}

SymMatrix SymMatrix::from_entries(std::size_t dim, std::vector<Scalar> entries) {
    if (entries.size() != dim * dim) throw DimensionMismatch(entries.size(), dim * dim, "from_entries");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (!(entries[i * dim + j] == entries[j * dim + i]))
                throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
    SymMatrix m;
    m.dim_ = dim;
    m.data_ = std::move(entries);
    return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    data_[i * dim_ + j] = v;
    data_[j * dim_ + i] = v;
}

void SymMatrix::add_to(std::size_t i, std::size_t j, const Scalar& v) {
    data_[i * dim_ + j] += v;
    if (i != j) data_[j * dim_ + i] += v;
}

void SymMatrix::add_rank_one(const Scalar& weight, const Vector& c) {
    if (c.size() != dim_) throw DimensionMismatch(c.size(), dim_, "add_rank_one");
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < dim_; ++i)
        if (!c[i].is_zero()) nz.push_back(i);
    for (std::size_t a = 0; a < nz.size(); ++a) {
        Scalar wa = weight * c[nz[a]];
        for (std::size_t b = a; b < nz.size(); ++b) add_to(nz[a], nz[b], wa * c[nz[b]]);
    }
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
    if (o.dim_ != dim_) throw DimensionMismatch(dim_, o.dim_, "matrix +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
    if (o.dim_ != dim_) throw DimensionMismatch(dim_, o.dim_, "matrix -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

SymMatrix SymMatrix::scaled(const Scalar& s) const {
    SymMatrix m = *this;
    for (auto& e : m.data_) e *= s;
    return m;
}

SymMatrix SymMatrix::plus_identity(const Scalar& s) const {
    SymMatrix m = *this;
    for (std::size_t i = 0; i < dim_; ++i) m.data_[i * dim_ + i] += s;
    return m;
}

Vector SymMatrix::operator*(const Vector& v) const {
    if (v.size() != dim_) throw DimensionMismatch(v.size(), dim_, "matrix-vector product");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

SymMatrix SymMatrix::congruence(const SymMatrix& p) const {
    if (p.dim_ != dim_) throw DimensionMismatch(dim_, p.dim_, "congruence");
    // (P A P)_{ij} = sum_{a,b} P_{ia} A_{ab} P_{bj}
    std::vector<Scalar> pa(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t a = 0; a < dim_; ++a) {
            if (p(i, a).is_zero()) continue;
            for (std::size_t b = 0; b < dim_; ++b) pa[i * dim_ + b] += p(i, a) * (*this)(a, b);
        }
    SymMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) {
            Scalar s;
            for (std::size_t b = 0; b < dim_; ++b)
                if (!p(b, j).is_zero()) s += pa[i * dim_ + b] * p(b, j);
            out.set(i, j, s);
        }
    return out;
}

SymMatrix SymMatrix::principal(const std::vector<std::size_t>& idx) const {
    SymMatrix out(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a; b < idx.size(); ++b) out.set(a, b, (*this)(idx[a], idx[b]));
    return out;
}

long SymMatrix::radicand() const {
    long r = 0;
    for (const auto& e : data_)
        if (!e.is_rational()) r = std::max(r, e.radicand());
    return r;
}

bool mat_equal(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim(), "mat_equal");
    return a == b;
}

Scalar dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size(), "dot");
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Scalar quadratic_form(const SymMatrix& a, const Vector& v) { return dot(v, a * v); }

Vector scaled(const Vector& v, const Scalar& s) {
    Vector out = v;
    for (auto& e : out) e *= s;
    return out;
}

Vector unit_vector(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::size_t exact_rank(const SymMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Vector> rows(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && rows[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < n; ++r) {
            if (rows[r][col].is_zero()) continue;
            Scalar f = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace edmcp
