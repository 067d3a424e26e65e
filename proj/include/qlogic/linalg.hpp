#pragma once

#include "qlogic/scalar.hpp"

#include "json.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qlogic {

class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : entries_(dim) {}
    explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}
    Vector(std::initializer_list<Scalar> entries) : entries_(entries) {}

    std::size_t dim() const { return entries_.size(); }
    const Scalar& operator[](std::size_t k) const { return entries_[k]; }
    Scalar& operator[](std::size_t k) { return entries_[k]; }
    std::span<const Scalar> entries() const { return entries_; }

    bool is_zero() const;
    bool is_real() const;
    Vector conj() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& c);

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<Scalar> entries_;
};

/// Dense row-major matrix. Zero rows are allowed (an empty basis still knows
/// its column count).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t nrows, std::size_t ncols) : nrows_(nrows), ncols_(ncols), data_(nrows * ncols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
    /// All rows must have length `ncols`.
    static Matrix from_rows(std::span<const Vector> rows, std::size_t ncols);
    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const Scalar> diag);

    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }
    bool is_square() const { return nrows_ == ncols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * ncols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * ncols_ + c]; }

    Vector row(std::size_t r) const;
    std::vector<Vector> rows() const;

    /// Entrywise conjugate.
    Matrix conj() const;
    /// Conjugate transpose.
    Matrix adjoint() const;
    Matrix transpose() const;

    Vector apply(const Vector& v) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& c);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& c, Matrix m) { return m *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t nrows_ = 0;
    std::size_t ncols_ = 0;
    std::vector<Scalar> data_;
};

/// Vertical concatenation; column counts must agree.
Matrix stack(const Matrix& top, const Matrix& bottom);

/// sum_k conj(v_k) * w_k; conjugate-linear in the first argument.
Scalar inner(const Vector& v, const Vector& w);

/// Reduced row echelon form over the Gaussian rationals. Zero rows are kept,
/// at the bottom.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, in RREF, with ncols(m) - rank(m) rows.
Matrix nullspace(const Matrix& m);
/// Drops zero rows from an RREF matrix.
Matrix nonzero_rows(const Matrix& m);

bool is_hermitian(const Matrix& m);
bool is_unitary(const Matrix& m);

// JSON: {"rows": [["1","i"],["0","1/2-1/3i"]]}; vectors are plain arrays of
// scalar strings.
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Matrix& m);
Vector vector_from_json(const nlohmann::json& j);
Matrix matrix_from_json(const nlohmann::json& j);

} // namespace qlogic
