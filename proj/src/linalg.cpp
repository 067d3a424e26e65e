#include "qlogic/linalg.hpp"

#include "qlogic/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qlogic {

bool Vector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Vector::is_real() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_real(); });
}

Vector Vector::conj() const {
    Vector out(dim());
    for (std::size_t k = 0; k < dim(); ++k)
        out[k] = entries_[k].conj();
    return out;
}

Vector& Vector::operator+=(const Vector& o) {
    if (o.dim() != dim())
        throw DimensionMismatch("vector addition", dim(), o.dim());
    for (std::size_t k = 0; k < dim(); ++k)
        entries_[k] += o[k];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    if (o.dim() != dim())
        throw DimensionMismatch("vector subtraction", dim(), o.dim());
    for (std::size_t k = 0; k < dim(); ++k)
        entries_[k] -= o[k];
    return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
    for (auto& e : entries_)
        e *= c;
    return *this;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : nrows_(rows.size()), ncols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(nrows_ * ncols_);
    for (const auto& r : rows) {
        if (r.size() != ncols_)
            throw DimensionMismatch("matrix literal row", ncols_, r.size());
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t ncols) {
    Matrix m(rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != ncols)
            throw DimensionMismatch("matrix row", ncols, rows[r].dim());
        for (std::size_t c = 0; c < ncols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = Scalar(1);
    return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k)
        m(k, k) = diag[k];
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(r * ncols_),
                                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * ncols_)));
}

std::vector<Vector> Matrix::rows() const {
    std::vector<Vector> out;
    out.reserve(nrows_);
    for (std::size_t r = 0; r < nrows_; ++r)
        out.push_back(row(r));
    return out;
}

Matrix Matrix::conj() const {
    Matrix out(nrows_, ncols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = data_[k].conj();
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(ncols_, nrows_);
    for (std::size_t r = 0; r < nrows_; ++r)
        for (std::size_t c = 0; c < ncols_; ++c)
            out(c, r) = (*this)(r, c).conj();
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(ncols_, nrows_);
    for (std::size_t r = 0; r < nrows_; ++r)
        for (std::size_t c = 0; c < ncols_; ++c)
            out(c, r) = (*this)(r, c);
    return out;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.dim() != ncols_)
        throw DimensionMismatch("matrix-vector product", ncols_, v.dim());
    Vector out(nrows_);
    for (std::size_t r = 0; r < nrows_; ++r)
        for (std::size_t c = 0; c < ncols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero())
                out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (o.nrows_ != nrows_ || o.ncols_ != ncols_)
        throw DimensionMismatch("matrix addition", nrows_ * ncols_, o.nrows_ * o.ncols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (o.nrows_ != nrows_ || o.ncols_ != ncols_)
        throw DimensionMismatch("matrix subtraction", nrows_ * ncols_, o.nrows_ * o.ncols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
    for (auto& e : data_)
        e *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.ncols_ != b.nrows_)
        throw DimensionMismatch("matrix product", a.ncols_, b.nrows_);
    Matrix out(a.nrows_, b.ncols_);
    for (std::size_t r = 0; r < a.nrows_; ++r)
        for (std::size_t k = 0; k < a.ncols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero())
                continue;
            for (std::size_t c = 0; c < b.ncols_; ++c)
                if (!b(k, c).is_zero())
                    out(r, c) += x * b(k, c);
        }
    return out;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
    if (top.ncols() != bottom.ncols())
        throw DimensionMismatch("stack", top.ncols(), bottom.ncols());
    Matrix out(top.nrows() + bottom.nrows(), top.ncols());
    for (std::size_t r = 0; r < top.nrows(); ++r)
        for (std::size_t c = 0; c < top.ncols(); ++c)
            out(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.nrows(); ++r)
        for (std::size_t c = 0; c < bottom.ncols(); ++c)
            out(top.nrows() + r, c) = bottom(r, c);
    return out;
}

Scalar inner(const Vector& v, const Vector& w) {
    if (v.dim() != w.dim())
        throw DimensionMismatch("inner product", v.dim(), w.dim());
    Scalar acc;
    for (std::size_t k = 0; k < v.dim(); ++k)
        if (!v[k].is_zero() && !w[k].is_zero())
            acc += v[k].conj() * w[k];
    return acc;
}

namespace {

// Gauss-Jordan in place; returns the pivot columns. Zero entries are skipped so
// an input that is already canonical costs one scan.
std::vector<std::size_t> reduce_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.ncols() && r < m.nrows(); ++c) {
        std::size_t p = r;
        while (p < m.nrows() && m(p, c).is_zero())
            ++p;
        if (p == m.nrows())
            continue;
        if (p != r)
            for (std::size_t k = c; k < m.ncols(); ++k)
                std::swap(m(p, k), m(r, k));
        if (!m(r, c).is_one()) {
            const Scalar inv = m(r, c).inverse();
            for (std::size_t k = c; k < m.ncols(); ++k)
                if (!m(r, k).is_zero())
                    m(r, k) *= inv;
        }
        for (std::size_t q = 0; q < m.nrows(); ++q) {
            if (q == r || m(q, c).is_zero())
                continue;
            const Scalar factor = m(q, c);
            for (std::size_t k = c; k < m.ncols(); ++k)
                if (!m(r, k).is_zero())
                    m(q, k) -= factor * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Matrix rref(const Matrix& m) {
    Matrix out = m;
    reduce_in_place(out);
    return out;
}

std::size_t rank(const Matrix& m) {
    Matrix work = m;
    return reduce_in_place(work).size();
}

Matrix nonzero_rows(const Matrix& m) {
    std::size_t keep = 0;
    for (std::size_t r = 0; r < m.nrows(); ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < m.ncols() && zero; ++c)
            zero = m(r, c).is_zero();
        if (!zero)
            keep = r + 1;
    }
    Matrix out(keep, m.ncols());
    for (std::size_t r = 0; r < keep; ++r)
        for (std::size_t c = 0; c < m.ncols(); ++c)
            out(r, c) = m(r, c);
    return out;
}

Matrix nullspace(const Matrix& m) {
    Matrix reduced = m;
    const auto pivots = reduce_in_place(reduced);
    std::vector<bool> is_pivot(m.ncols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;

    // Free column f gives x_f = 1 and x_{pivot(i)} = -R(i, f).
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.ncols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector x(m.ncols());
        x[f] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -reduced(i, f);
        basis.push_back(std::move(x));
    }
    Matrix out = Matrix::from_rows(basis, m.ncols());
    reduce_in_place(out);
    return out;
}

bool is_hermitian(const Matrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("is_hermitian: matrix is not square");
    for (std::size_t r = 0; r < m.nrows(); ++r)
        for (std::size_t c = r; c < m.ncols(); ++c)
            if (!(m(r, c) == m(c, r).conj()))
                return false;
    return true;
}

bool is_unitary(const Matrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("is_unitary: matrix is not square");
    return m * m.adjoint() == Matrix::identity(m.nrows());
}

nlohmann::json to_json(const Vector& v) {
    auto j = nlohmann::json::array();
    for (const auto& s : v.entries())
        j.push_back(to_string(s));
    return j;
}

nlohmann::json to_json(const Matrix& m) {
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.nrows(); ++r)
        rows.push_back(to_json(m.row(r)));
    return nlohmann::json{{"rows", rows}};
}

Vector vector_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw ParseError("vector must be a JSON array of scalar strings");
    std::vector<Scalar> entries;
    entries.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_string())
            throw ParseError("vector entry must be a string, got " + e.dump());
        entries.push_back(parse_scalar(e.get<std::string>()));
    }
    if (entries.empty())
        throw ParseError("vector must have at least one entry");
    return Vector(std::move(entries));
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array())
        throw ParseError("matrix must be an object with a \"rows\" array");
    const auto& rows = j.at("rows");
    std::vector<Vector> parsed;
    for (const auto& r : rows)
        parsed.push_back(vector_from_json(r));
    std::size_t ncols = 0;
    if (!parsed.empty())
        ncols = parsed.front().dim();
    else if (j.contains("ncols"))
        ncols = j.at("ncols").get<std::size_t>();
    for (const auto& r : parsed)
        if (r.dim() != ncols)
            throw ParseError("matrix rows have unequal lengths");
    return Matrix::from_rows(parsed, ncols);
}

} // namespace qlogic
