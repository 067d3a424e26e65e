#pragma once

// Test-side oracles. These deliberately avoid the library's lattice code so
// that agreement means something.

#include "qlogic/linalg.hpp"
#include "qlogic/random.hpp"
#include "qlogic/subspace.hpp"

#include <complex>
#include <random>
#include <vector>

namespace testing {

using qlogic::Matrix;
using qlogic::Rational;
using qlogic::Scalar;
using qlogic::Subspace;
using qlogic::Vector;

inline std::complex<double> to_complex(const Scalar& z) { return {z.re().get_d(), z.im().get_d()}; }

inline std::vector<std::complex<double>> to_complex(const Vector& v) {
    std::vector<std::complex<double>> out;
    for (const auto& z : v.entries())
        out.push_back(to_complex(z));
    return out;
}

// Textbook sesquilinear form in floating point.
inline std::complex<double> float_inner(const Vector& v, const Vector& w) {
    std::complex<double> acc{};
    for (std::size_t k = 0; k < v.dim(); ++k)
        acc += std::conj(to_complex(v[k])) * to_complex(w[k]);
    return acc;
}

inline Scalar small_scalar(std::mt19937_64& rng, bool gaussian = true) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    Rational re(num(rng), den(rng));
    Rational im = gaussian ? Rational(num(rng), den(rng)) : Rational(0);
    re.canonicalize();
    im.canonicalize();
    return Scalar(re, im);
}

inline Vector small_vector(std::size_t n, std::mt19937_64& rng, bool gaussian = true) {
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k)
        v[k] = small_scalar(rng, gaussian);
    return v;
}

inline Matrix small_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = small_scalar(rng);
    return m;
}

// Lower-unitriangular times upper-triangular with nonzero diagonal: always
// invertible, no determinant needed.
inline Matrix random_invertible(std::size_t n, std::mt19937_64& rng) {
    Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j < i)
                lower(i, j) = small_scalar(rng);
            if (j > i)
                upper(i, j) = small_scalar(rng);
        }
    for (std::size_t i = 0; i < n; ++i) {
        Scalar d;
        do
            d = small_scalar(rng);
        while (d.is_zero());
        upper(i, i) = d;
    }
    return lower * upper;
}

// Zassenhaus: row-reduce [[U, U], [W, 0]]; rows whose left half vanishes
// carry a basis of the intersection in their right half.
inline Subspace zassenhaus_meet(const Subspace& s, const Subspace& t) {
    const std::size_t n = s.space_dim();
    Matrix block(s.dim() + t.dim(), 2 * n);
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            block(r, c) = s.basis()(r, c);
            block(r, n + c) = s.basis()(r, c);
        }
    for (std::size_t r = 0; r < t.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            block(s.dim() + r, c) = t.basis()(r, c);
    const Matrix reduced = qlogic::rref(block);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < reduced.nrows(); ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c)
            left_zero = reduced(r, c).is_zero();
        if (!left_zero)
            continue;
        Vector v(n);
        for (std::size_t c = 0; c < n; ++c)
            v[c] = reduced(r, n + c);
        if (!v.is_zero())
            rows.push_back(v);
    }
    return Subspace::from_generators(Matrix::from_rows(rows, n));
}

// Every basis vector of `a` is orthogonal to every basis vector of `b`.
inline bool mutually_orthogonal(const Subspace& a, const Subspace& b) {
    for (const auto& u : a.basis().rows())
        for (const auto& w : b.basis().rows())
            if (!qlogic::inner(u, w).is_zero())
                return false;
    return true;
}

// Containment by membership of basis vectors; independent of leq().
inline bool contained(const Subspace& a, const Subspace& b) {
    for (const auto& u : a.basis().rows())
        if (!b.contains(u))
            return false;
    return true;
}

// All subspaces of Q^3 spanned by up to two vectors with entries in {-1,0,1}.
inline std::vector<Subspace> small_grid_subspaces3() {
    std::vector<Vector> vs;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                if (a || b || c)
                    vs.push_back(Vector{a, b, c});
    std::vector<Subspace> out{Subspace::zero(3), Subspace::full(3)};
    auto add = [&](const Subspace& s) {
        for (const auto& e : out)
            if (e == s)
                return;
        out.push_back(s);
    };
    for (std::size_t i = 0; i < vs.size(); ++i) {
        add(Subspace::from_generators(Matrix::from_rows(std::span(&vs[i], 1), 3)));
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const Vector pair[] = {vs[i], vs[j]};
            add(Subspace::from_generators(Matrix::from_rows(pair, 3)));
        }
    }
    return out;
}

// |psi - phi|^2 < eps^2, for checking that exact answers sit where floating
// point says they should.
inline bool in_ball(const std::vector<std::complex<double>>& psi, const std::vector<std::complex<double>>& phi,
                    double eps) {
    double d = 0;
    for (std::size_t k = 0; k < psi.size(); ++k)
        d += std::norm(psi[k] - phi[k]);
    return d < eps * eps;
}

} // namespace testing
