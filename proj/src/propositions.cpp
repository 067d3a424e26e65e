#include "qlogic/propositions.hpp"

#include "qlogic/error.hpp"
#include "qlogic/spin.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

namespace qlogic {

Interval::Interval(std::optional<Rational> lo, std::optional<Rational> hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed && lo_), hi_closed_(hi_closed && hi_) {
    if (lo_ && hi_ && *lo_ > *hi_)
        throw std::invalid_argument("interval lower bound exceeds upper bound");
}

bool Interval::contains(const Rational& x) const {
    if (lo_ && (lo_closed_ ? x < *lo_ : x <= *lo_))
        return false;
    if (hi_ && (hi_closed_ ? x > *hi_ : x >= *hi_))
        return false;
    return true;
}

struct Proposition::Node {
    struct Expectation {
        Matrix observable;
        std::vector<Interval> set;
    };

    Kind kind;
    std::optional<std::size_t> dim;
    std::variant<std::monostate, Subspace, Expectation, Vector, std::vector<Proposition>> payload;
};

namespace {

std::optional<std::size_t> common_dim(const std::vector<Proposition>& children) {
    std::optional<std::size_t> dim;
    for (const auto& c : children) {
        const auto d = c.space_dim();
        if (!d)
            continue;
        if (dim && *dim != *d)
            throw DimensionMismatch("proposition combinator", *dim, *d);
        dim = d;
    }
    return dim;
}

} // namespace

Proposition Proposition::in_subspace(Subspace s) {
    const auto n = s.space_dim();
    return Proposition(std::make_shared<const Node>(Node{Kind::InSubspace, n, std::move(s)}));
}

Proposition Proposition::expectation_in(Matrix observable, std::vector<Interval> set) {
    if (!observable.is_square() || !is_hermitian(observable))
        throw std::invalid_argument("expectation_in: observable must be Hermitian");
    const auto n = observable.nrows();
    return Proposition(std::make_shared<const Node>(
        Node{Kind::ExpectationIn, n, Node::Expectation{std::move(observable), std::move(set)}}));
}

Proposition Proposition::equals(Vector v) {
    const auto n = v.dim();
    return Proposition(std::make_shared<const Node>(Node{Kind::EqualsVector, n, std::move(v)}));
}

Proposition Proposition::all_of(std::vector<Proposition> children) {
    auto dim = common_dim(children);
    return Proposition(std::make_shared<const Node>(Node{Kind::And, dim, std::move(children)}));
}

Proposition Proposition::any_of(std::vector<Proposition> children) {
    auto dim = common_dim(children);
    return Proposition(std::make_shared<const Node>(Node{Kind::Or, dim, std::move(children)}));
}

Proposition Proposition::negation(Proposition child) {
    auto dim = child.space_dim();
    return Proposition(
        std::make_shared<const Node>(Node{Kind::Not, dim, std::vector<Proposition>{std::move(child)}}));
}

Proposition Proposition::top() { return Proposition(std::make_shared<const Node>(Node{Kind::True, {}, {}})); }

Proposition Proposition::bottom() {
    return Proposition(std::make_shared<const Node>(Node{Kind::False, {}, {}}));
}

Proposition::Kind Proposition::kind() const { return node_->kind; }
std::optional<std::size_t> Proposition::space_dim() const { return node_->dim; }
const Subspace& Proposition::subspace() const { return std::get<Subspace>(node_->payload); }
const Matrix& Proposition::observable() const { return std::get<Node::Expectation>(node_->payload).observable; }
const std::vector<Interval>& Proposition::intervals() const {
    return std::get<Node::Expectation>(node_->payload).set;
}
const Vector& Proposition::vector() const { return std::get<Vector>(node_->payload); }
const std::vector<Proposition>& Proposition::children() const {
    return std::get<std::vector<Proposition>>(node_->payload);
}

Rational expectation(const Matrix& a, const Vector& psi) {
    if (!a.is_square() || a.ncols() != psi.dim())
        throw DimensionMismatch("expectation", a.ncols(), psi.dim());
    if (!is_hermitian(a))
        throw std::invalid_argument("expectation: observable is not Hermitian");
    if (psi.is_zero())
        throw std::domain_error("expectation: zero state vector");
    const Scalar num = inner(psi, a.apply(psi));
    const Scalar den = inner(psi, psi);
    if (!num.is_real() || !den.is_real())
        throw std::logic_error("expectation: Hermitian form produced a non-real value");
    return num.re() / den.re();
}

namespace {

bool eval_node(const Proposition& p, const Vector& psi) {
    using K = Proposition::Kind;
    switch (p.kind()) {
    case K::InSubspace:
        return p.subspace().contains(psi);
    case K::ExpectationIn: {
        const Rational e = expectation(p.observable(), psi);
        return std::any_of(p.intervals().begin(), p.intervals().end(),
                           [&](const Interval& i) { return i.contains(e); });
    }
    case K::EqualsVector:
        return psi == p.vector();
    case K::And:
        return std::all_of(p.children().begin(), p.children().end(),
                           [&](const Proposition& c) { return eval_node(c, psi); });
    case K::Or:
        return std::any_of(p.children().begin(), p.children().end(),
                           [&](const Proposition& c) { return eval_node(c, psi); });
    case K::Not:
        return !eval_node(p.children().front(), psi);
    case K::True:
        return true;
    case K::False:
        return false;
    }
    return false;
}

} // namespace

bool eval(const Proposition& p, const Vector& psi) {
    if (psi.is_zero())
        throw std::domain_error("eval: zero state vector");
    if (const auto d = p.space_dim(); d && *d != psi.dim())
        throw DimensionMismatch("eval", *d, psi.dim());
    return eval_node(p, psi);
}

std::optional<ClosureViolation> find_closure_violation(const Proposition& p, std::span<const Vector> probes) {
    for (const auto& v : probes) {
        if (probes.front().dim() != v.dim())
            throw DimensionMismatch("closure probes", probes.front().dim(), v.dim());
        if (v.is_zero())
            throw std::domain_error("closure probes must be nonzero");
    }
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < probes.size(); ++k)
        if (eval(p, probes[k]))
            members.push_back(k);

    const Rational coefficients[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a; b < members.size(); ++b)
            for (const auto& alpha : coefficients)
                for (const auto& beta : coefficients) {
                    const auto& u = probes[members[a]];
                    const auto& w = probes[members[b]];
                    Vector combo = Scalar(alpha) * u + Scalar(beta) * w;
                    if (combo.is_zero())
                        continue;
                    if (!eval(p, combo))
                        return ClosureViolation{members[a], members[b], alpha, beta, std::move(combo)};
                }
    return std::nullopt;
}

bool is_subspace_closed(const Proposition& p, std::span<const Vector> probes) {
    return !find_closure_violation(p, probes).has_value();
}

Rational spin_bound_witness(const Vector& psi) {
    if (psi.dim() != 2)
        throw DimensionMismatch("spin_bound_witness", 2, psi.dim());
    return expectation(spin::sy(), psi);
}

nlohmann::json to_json(const Interval& i) {
    return nlohmann::json{{"lo", i.lo() ? to_string(*i.lo()) : "-inf"},
                          {"hi", i.hi() ? to_string(*i.hi()) : "inf"},
                          {"lo_closed", i.lo_closed()},
                          {"hi_closed", i.hi_closed()}};
}

Interval interval_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
        throw ParseError("interval must be an object with \"lo\" and \"hi\"");
    const auto lo = j.at("lo").get<std::string>();
    const auto hi = j.at("hi").get<std::string>();
    std::optional<Rational> lo_v, hi_v;
    if (lo != "-inf")
        lo_v = parse_rational(lo);
    if (hi != "inf")
        hi_v = parse_rational(hi);
    return Interval(std::move(lo_v), std::move(hi_v), j.value("lo_closed", false), j.value("hi_closed", false));
}

nlohmann::json to_json(const Proposition& p) {
    using K = Proposition::Kind;
    auto children = [&] {
        auto arr = nlohmann::json::array();
        for (const auto& c : p.children())
            arr.push_back(to_json(c));
        return arr;
    };
    switch (p.kind()) {
    case K::InSubspace:
        return {{"tag", "in_subspace"}, {"subspace", to_json(p.subspace())}};
    case K::ExpectationIn: {
        auto set = nlohmann::json::array();
        for (const auto& i : p.intervals())
            set.push_back(to_json(i));
        return {{"tag", "expectation_in"}, {"observable", to_json(p.observable())}, {"set", set}};
    }
    case K::EqualsVector:
        return {{"tag", "equals"}, {"vector", to_json(p.vector())}};
    case K::And:
        return {{"tag", "and"}, {"children", children()}};
    case K::Or:
        return {{"tag", "or"}, {"children", children()}};
    case K::Not:
        return {{"tag", "not"}, {"child", to_json(p.children().front())}};
    case K::True:
        return {{"tag", "true"}};
    case K::False:
        return {{"tag", "false"}};
    }
    return {};
}

namespace {

// A matrix object, or one of the names "S_x", "S_y", "S_z".
Matrix observable_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_string())
        return matrix_from_json(j);
    const auto name = j.get<std::string>();
    if (name == "S_x")
        return spin::sx();
    if (name == "S_y")
        return spin::sy();
    if (name == "S_z")
        return spin::sz();
    throw ParseError("unknown observable name '" + name + "'");
}

} // namespace

Proposition proposition_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("tag") || !j.at("tag").is_string())
        throw ParseError("proposition node must be an object with a string \"tag\"");
    const auto tag = j.at("tag").get<std::string>();
    auto children = [&] {
        std::vector<Proposition> out;
        if (!j.contains("children") || !j.at("children").is_array())
            throw ParseError("\"" + tag + "\" node needs a \"children\" array");
        for (const auto& c : j.at("children"))
            out.push_back(proposition_from_json(c));
        return out;
    };
    if (tag == "in_subspace")
        return Proposition::in_subspace(subspace_from_json(j.at("subspace")));
    if (tag == "expectation_in") {
        std::vector<Interval> set;
        for (const auto& i : j.at("set"))
            set.push_back(interval_from_json(i));
        return Proposition::expectation_in(observable_matrix_from_json(j.at("observable")), std::move(set));
    }
    if (tag == "equals")
        return Proposition::equals(vector_from_json(j.at("vector")));
    if (tag == "and")
        return Proposition::all_of(children());
    if (tag == "or")
        return Proposition::any_of(children());
    if (tag == "not")
        return Proposition::negation(proposition_from_json(j.at("child")));
    if (tag == "true")
        return Proposition::top();
    if (tag == "false")
        return Proposition::bottom();
    throw ParseError("unknown proposition tag '" + tag + "'");
}

} // namespace qlogic
