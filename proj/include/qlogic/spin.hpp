#pragma once

#include "qlogic/linalg.hpp"

namespace qlogic::spin {

// Spin-1/2 with hbar = 1: eigenvalues are +-1/2.

inline const Scalar half{Rational(1, 2)};

inline Matrix sx() { return half * Matrix{{0, 1}, {1, 0}}; }
inline Matrix sy() { return half * Matrix{{0, -Scalar::i()}, {Scalar::i(), 0}}; }
inline Matrix sz() { return half * Matrix{{1, 0}, {0, -1}}; }

// Unnormalized eigenvectors.
inline Vector x_up() { return {1, 1}; }
inline Vector x_down() { return {1, -1}; }
inline Vector y_up() { return {1, Scalar::i()}; }
inline Vector y_down() { return {1, -Scalar::i()}; }
inline Vector z_up() { return {1, 0}; }
inline Vector z_down() { return {0, 1}; }

// Spectral projectors, all Gaussian-rational.
inline Matrix px_up() { return half * Matrix{{1, 1}, {1, 1}}; }
inline Matrix px_down() { return half * Matrix{{1, -1}, {-1, 1}}; }
inline Matrix py_up() { return half * Matrix{{1, -Scalar::i()}, {Scalar::i(), 1}}; }
inline Matrix py_down() { return half * Matrix{{1, Scalar::i()}, {-Scalar::i(), 1}}; }
inline Matrix pz_up() { return Matrix{{1, 0}, {0, 0}}; }
inline Matrix pz_down() { return Matrix{{0, 0}, {0, 1}}; }

/// diag(1, i): takes the y-down ray to the x-up ray.
inline Matrix quarter_turn() { return Matrix{{1, 0}, {0, Scalar::i()}}; }

} // namespace qlogic::spin
