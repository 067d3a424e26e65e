#pragma once

#include "qlogic/subspace.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qlogic {

/// Lattice term over variables, 0, 1 and the connectives ! & |.
class Term {
public:
    enum class Kind { Var, Bottom, Top, Not, And, Or };

    /// Throws std::invalid_argument unless `name` matches [a-zA-Z][a-zA-Z0-9_]*.
    static Term var(std::string name);
    static Term bottom();
    static Term top();
    static Term negation(Term child);
    static Term meet(Term left, Term right);
    static Term join(Term left, Term right);

    Kind kind() const;
    const std::string& name() const;
    const Term& child() const;
    const Term& left() const;
    const Term& right() const;

    /// Distinct variable names in sorted order.
    std::vector<std::string> variables() const;

    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

enum class Relation { Equal, Leq };

struct IdentityStatement {
    Term lhs;
    Term rhs;
    Relation relation;

    std::vector<std::string> variables() const;
    friend bool operator==(const IdentityStatement&, const IdentityStatement&) = default;
};

/// stmt := term ("=" | "<=") term, with ! binding tighter than &, & tighter
/// than |, both binary connectives left-associative. Unicode aliases:
/// ∧ ∨ ¬ ≤ ⊥ ⊤. Errors carry a 1-based character position.
IdentityStatement parse_statement(std::string_view text);
Term parse_term(std::string_view text);

/// One statement per line; '#' starts a comment.
std::vector<IdentityStatement> parse_statements(std::string_view text);

/// Minimal parentheses; parsing the output gives back the same tree.
std::string to_string(const Term& t);
std::string to_string(const IdentityStatement& s);

struct SubspaceLattice {
    std::size_t space_dim;
    ScalarField field = ScalarField::GaussianRational;
};

/// Subsets of {1, ..., universe_size}; universe_size <= 64.
struct BooleanSetAlgebra {
    std::size_t universe_size;
};

using Structure = std::variant<SubspaceLattice, BooleanSetAlgebra>;

/// Bit k set means element k + 1 is a member.
struct Subset {
    std::uint64_t members = 0;
    friend bool operator==(const Subset&, const Subset&) = default;
};

using Element = std::variant<Subspace, Subset>;
using Assignment = std::map<std::string, Element>;

/// Throws std::invalid_argument for an unbound variable or an element that
/// does not belong to `s`.
Element eval_term(const Term& t, const Assignment& assignment, const Structure& s);
bool element_leq(const Element& a, const Element& b);
bool holds(const IdentityStatement& stmt, const Assignment& assignment, const Structure& s);

struct Counterexample {
    std::uint64_t trial;
    Assignment assignment;
    Element lhs, rhs;
};

struct CheckReport {
    IdentityStatement statement;
    Structure structure;
    std::uint64_t trials;  // assignments evaluated (all of them when exhaustive)
    std::uint64_t seed;
    bool exhaustive;
    std::optional<Counterexample> counterexample;

    std::string verdict() const;
};

/// Exhaustive over Boolean algebras with at most 2^16 assignments, seeded
/// random assignments otherwise. The lowest-index counterexample is returned.
CheckReport check(const IdentityStatement& stmt, const Structure& s, std::uint64_t trials, std::uint64_t seed);

/// Re-evaluates a reported counterexample: both sides must reproduce and the
/// relation must fail. Reports without a counterexample verify trivially.
bool verify(const CheckReport& report);

struct OrthomodularReport {
    std::uint64_t trials;
    std::uint64_t comparable_pairs;  // pairs with s <= t, where the law has content
    std::optional<std::uint64_t> violation_trial;
};

/// Samples pairs (s, t), half of them with s drawn inside t, and checks
/// s <= t  =>  t = s | (t & !s).
OrthomodularReport check_orthomodular_law(const SubspaceLattice& s, std::uint64_t trials, std::uint64_t seed);

std::string to_string(const Element& e);
nlohmann::json to_json(const Element& e);
nlohmann::json to_json(const Structure& s);
nlohmann::json to_json(const CheckReport& r);

} // namespace qlogic
