#include "qlogic/classical.hpp"

#include "qlogic/error.hpp"

#include <set>
#include <stdexcept>

namespace qlogic {

PhaseSpace::PhaseSpace(std::vector<std::string> points) : points_(std::move(points)) {
    if (points_.empty())
        throw std::invalid_argument("phase space has no points");
    if (std::set<std::string>(points_.begin(), points_.end()).size() != points_.size())
        throw std::invalid_argument("phase space labels are not distinct");
}

std::size_t PhaseSpace::index_of(std::string_view label) const {
    for (std::size_t k = 0; k < points_.size(); ++k)
        if (points_[k] == label)
            return k;
    throw std::out_of_range("unknown phase-space point '" + std::string(label) + "'");
}

ClassicalState::ClassicalState(Vector amplitude) : amplitude_(std::move(amplitude)) {
    if (!amplitude_.is_real())
        throw std::invalid_argument("classical amplitudes must be real");
    if (amplitude_.is_zero())
        throw std::domain_error("classical state must be nonzero");
}

MultiplicativeObservable::MultiplicativeObservable(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty())
        throw std::invalid_argument("multiplicative observable has no values");
}

Matrix MultiplicativeObservable::as_matrix() const {
    std::vector<Scalar> diag(values_.begin(), values_.end());
    return Matrix::diagonal(diag);
}

std::vector<Rational> density(const ClassicalState& s) {
    const auto& a = s.amplitude();
    Rational norm(0);
    for (const auto& x : a.entries())
        norm += x.re() * x.re();
    std::vector<Rational> rho;
    rho.reserve(a.dim());
    for (const auto& x : a.entries())
        rho.push_back(x.re() * x.re() / norm);
    return rho;
}

Rational classical_expectation(const MultiplicativeObservable& f, const ClassicalState& s) {
    if (f.values().size() != s.dim())
        throw DimensionMismatch("classical_expectation", s.dim(), f.values().size());
    const auto rho = density(s);
    Rational direct(0);
    for (std::size_t k = 0; k < rho.size(); ++k)
        direct += f.values()[k] * rho[k];

    const Matrix diag = f.as_matrix();
    const Vector& psi = s.amplitude();
    const Scalar num = inner(psi, diag.apply(psi));
    const Scalar den = inner(psi, psi);
    if (!num.is_real() || num.re() / den.re() != direct)
        throw std::logic_error("classical_expectation: density and inner-product forms disagree");
    return direct;
}

namespace {

Subspace line(const Scalar& a, const Scalar& b) {
    const Vector v{a, b};
    return span(std::span<const Vector>(&v, 1), 2);
}

} // namespace

TwoStateVerdict two_state_demo(ScalarField field) {
    const Scalar k = field == ScalarField::RationalReal ? Scalar(1) : Scalar(Rational(1), Rational(2));
    const Scalar j = field == ScalarField::RationalReal ? Scalar(2) : Scalar(Rational(3), Rational(-1));

    Subspace first = line(k, 0);
    Subspace second = line(0, k);
    Subspace equal = line(k, k);
    const Vector gens[] = {Vector{k, 0}, Vector{0, j}};
    Subspace whole = span(gens, 2);

    const Subspace zero = Subspace::zero(2);
    const bool disjoint = meet(first, second) == zero && meet(second, equal) == zero && meet(equal, first) == zero;
    if (!disjoint || !(join(first, second) == whole) || !(meet(equal, whole) == equal))
        throw std::logic_error("two_state_demo: subspace relations do not hold");

    Subspace left = meet(equal, join(first, second));
    Subspace right = join(meet(equal, first), meet(equal, second));
    const bool distributive = left == right;
    return TwoStateVerdict{field,
                           std::move(first),
                           std::move(second),
                           std::move(equal),
                           std::move(whole),
                           std::move(left),
                           std::move(right),
                           disjoint,
                           distributive};
}

std::string two_state_name(const Subspace& s) {
    if (s.space_dim() == 2) {
        if (s == Subspace::zero(2))
            return "[0,0]";
        if (s == Subspace::full(2))
            return "[k,j]";
        if (s == line(1, 0))
            return "[k,0]";
        if (s == line(0, 1))
            return "[0,k]";
        if (s == line(1, 1))
            return "[k,k]";
    }
    return to_json(s).at("basis").dump();
}

nlohmann::json to_json(const TwoStateVerdict& v) {
    return {{"field", to_string(v.field)},
            {"left", two_state_name(v.left)},
            {"right", two_state_name(v.right)},
            {"left_subspace", to_json(v.left)},
            {"right_subspace", to_json(v.right)},
            {"pairwise_meets",
             {{"[k,0] ^ [0,k]", two_state_name(meet(v.first, v.second))},
              {"[0,k] ^ [k,k]", two_state_name(meet(v.second, v.equal))},
              {"[k,k] ^ [k,0]", two_state_name(meet(v.equal, v.first))}}},
            {"whole", two_state_name(v.whole)},
            {"pairwise_disjoint", v.pairwise_disjoint},
            {"distributive", v.distributive},
            {"verdict", v.distributive ? "distributive" : "not distributive"}};
}

ClassicalStateFile classical_state_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("amplitude"))
        throw ParseError("classical state must be an object with \"points\" and \"amplitude\"");
    PhaseSpace space(j.at("points").get<std::vector<std::string>>());
    ClassicalState state(vector_from_json(j.at("amplitude")));
    if (state.dim() != space.size())
        throw DimensionMismatch("classical state", space.size(), state.dim());
    return {std::move(space), std::move(state)};
}

nlohmann::json to_json(const PhaseSpace& space, const ClassicalState& s) {
    return {{"points", space.points()}, {"amplitude", to_json(s.amplitude())}};
}

} // namespace qlogic
