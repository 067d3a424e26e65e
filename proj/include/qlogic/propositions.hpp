#pragma once

#include "qlogic/subspace.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace qlogic {

/// Rational interval; a missing bound means -inf / +inf (always open).
class Interval {
public:
    Interval(std::optional<Rational> lo, std::optional<Rational> hi, bool lo_closed, bool hi_closed);

    static Interval point(const Rational& a) { return Interval(a, a, true, true); }
    static Interval closed(const Rational& lo, const Rational& hi) { return Interval(lo, hi, true, true); }
    static Interval open(std::optional<Rational> lo, std::optional<Rational> hi) {
        return Interval(std::move(lo), std::move(hi), false, false);
    }

    const std::optional<Rational>& lo() const { return lo_; }
    const std::optional<Rational>& hi() const { return hi_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }

    bool contains(const Rational& x) const;

private:
    std::optional<Rational> lo_, hi_;
    bool lo_closed_, hi_closed_;
};

/// Predicate over (nonzero) state vectors. Immutable; copies share structure.
/// There is deliberately no equality: compare propositions by evaluating them.
class Proposition {
public:
    enum class Kind { InSubspace, ExpectationIn, EqualsVector, And, Or, Not, True, False };

    static Proposition in_subspace(Subspace s);
    /// Throws std::invalid_argument unless `observable` is Hermitian.
    static Proposition expectation_in(Matrix observable, std::vector<Interval> set);
    static Proposition equals(Vector v);
    static Proposition all_of(std::vector<Proposition> children);
    static Proposition any_of(std::vector<Proposition> children);
    static Proposition negation(Proposition child);
    static Proposition top();
    static Proposition bottom();

    friend Proposition operator&(Proposition a, Proposition b) { return all_of({std::move(a), std::move(b)}); }
    friend Proposition operator|(Proposition a, Proposition b) { return any_of({std::move(a), std::move(b)}); }
    friend Proposition operator!(Proposition a) { return negation(std::move(a)); }

    Kind kind() const;
    /// Dimension of the embedded objects; empty for trees made only of True/False.
    std::optional<std::size_t> space_dim() const;

    const Subspace& subspace() const;
    const Matrix& observable() const;
    const std::vector<Interval>& intervals() const;
    const Vector& vector() const;
    const std::vector<Proposition>& children() const;

    /// Node identity (same construction, not extensional equality).
    const void* identity() const { return node_.get(); }

private:
    struct Node;
    explicit Proposition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// <psi, A psi> / <psi, psi>. Throws on a zero vector, a non-Hermitian
/// observable or a dimension mismatch.
Rational expectation(const Matrix& a, const Vector& psi);

bool eval(const Proposition& p, const Vector& psi);

struct ClosureViolation {
    std::size_t first, second;
    Rational alpha, beta;
    Vector combination;
};

/// Searches alpha*u + beta*w over pairs of satisfying probes, with alpha and
/// beta from {1, -1, 2, 1/2}, for a nonzero combination that fails `p`.
std::optional<ClosureViolation> find_closure_violation(const Proposition& p, std::span<const Vector> probes);

/// One-sided: false means a violation was found, true only that none was.
bool is_subspace_closed(const Proposition& p, std::span<const Vector> probes);

/// Expectation of S_y; |value| <= 1/2 with equality exactly on the y rays.
Rational spin_bound_witness(const Vector& psi);

nlohmann::json to_json(const Interval& i);
Interval interval_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Proposition& p);
Proposition proposition_from_json(const nlohmann::json& j);

} // namespace qlogic
