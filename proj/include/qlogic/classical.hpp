#pragma once

#include "qlogic/subspace.hpp"

#include <string>
#include <vector>

namespace qlogic {

/// Finite set of distinct sample-point labels.
class PhaseSpace {
public:
    explicit PhaseSpace(std::vector<std::string> points);

    const std::vector<std::string>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    std::size_t index_of(std::string_view label) const;

private:
    std::vector<std::string> points_;
};

/// Real amplitude vector whose squared entries, normalized, give the density.
/// Signs are allowed: (1, 1) and (1, -1) describe the same distribution.
class ClassicalState {
public:
    explicit ClassicalState(Vector amplitude);

    const Vector& amplitude() const { return amplitude_; }
    std::size_t dim() const { return amplitude_.dim(); }

private:
    Vector amplitude_;
};

/// Diagonal observable f(point).
class MultiplicativeObservable {
public:
    explicit MultiplicativeObservable(std::vector<Rational> values);

    const std::vector<Rational>& values() const { return values_; }
    Matrix as_matrix() const;

private:
    std::vector<Rational> values_;
};

/// rho_k = s_k^2 / <s, s>.
std::vector<Rational> density(const ClassicalState& s);

/// sum_k f_k rho_k. Also evaluated as <s, diag(f) s> / <s, s>; the two must
/// agree exactly (std::logic_error otherwise).
Rational classical_expectation(const MultiplicativeObservable& f, const ClassicalState& s);

struct TwoStateVerdict {
    ScalarField field;
    Subspace first, second, equal, whole;  // [k,0], [0,k], [k,k], [k,j]
    Subspace left;                          // [k,k] ^ ([k,0] v [0,k])
    Subspace right;                         // ([k,k] ^ [k,0]) v ([k,k] ^ [0,k])
    bool pairwise_disjoint;
    bool distributive;
};

/// The two-point sample space with [k,0], [0,k] and [k,k]. Over the Gaussian
/// field the spanning vectors use k = 1 + 2i.
TwoStateVerdict two_state_demo(ScalarField field = ScalarField::RationalReal);

/// "[0,0]", "[k,0]", "[0,k]", "[k,k]", "[k,j]" for the subspaces of the
/// two-state demo; the RREF basis text otherwise.
std::string two_state_name(const Subspace& s);

nlohmann::json to_json(const TwoStateVerdict& v);

struct ClassicalStateFile {
    PhaseSpace space;
    ClassicalState state;
};

// {"points": ["1","2"], "amplitude": ["1","1"]}
ClassicalStateFile classical_state_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PhaseSpace& space, const ClassicalState& s);

} // namespace qlogic
