#include "qlogic/identity.hpp"

#include <stdexcept>

namespace qlogic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::uint64_t kExhaustiveBits = 16;

std::uint64_t universe_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void validate(const Structure& s) {
    std::visit(overloaded{
                   [](const SubspaceLattice& l) {
                       if (l.space_dim < 1)
                           throw std::invalid_argument("subspace lattice needs space_dim >= 1");
                   },
                   [](const BooleanSetAlgebra& b) {
                       if (b.universe_size < 1 || b.universe_size > 64)
                           throw std::invalid_argument("boolean algebra universe size must be in 1..64");
                   },
               },
               s);
}

const Subspace& as_subspace(const Element& e, const SubspaceLattice& l) {
    const auto* s = std::get_if<Subspace>(&e);
    if (!s || s->space_dim() != l.space_dim)
        throw std::invalid_argument("element is not a subspace of dimension " + std::to_string(l.space_dim));
    return *s;
}

Subset as_subset(const Element& e, const BooleanSetAlgebra& b) {
    const auto* s = std::get_if<Subset>(&e);
    if (!s || (s->members & ~universe_mask(b.universe_size)))
        throw std::invalid_argument("element is not a subset of the universe");
    return *s;
}

Element eval_subspace(const Term& t, const Assignment& a, const SubspaceLattice& l) {
    switch (t.kind()) {
    case Term::Kind::Var: {
        const auto it = a.find(t.name());
        if (it == a.end())
            throw std::invalid_argument("unbound variable '" + t.name() + "'");
        return as_subspace(it->second, l);
    }
    case Term::Kind::Bottom:
        return Subspace::zero(l.space_dim);
    case Term::Kind::Top:
        return Subspace::full(l.space_dim);
    case Term::Kind::Not:
        return ortho(std::get<Subspace>(eval_subspace(t.child(), a, l)));
    case Term::Kind::And:
        return meet(std::get<Subspace>(eval_subspace(t.left(), a, l)),
                    std::get<Subspace>(eval_subspace(t.right(), a, l)));
    case Term::Kind::Or:
        return join(std::get<Subspace>(eval_subspace(t.left(), a, l)),
                    std::get<Subspace>(eval_subspace(t.right(), a, l)));
    }
    throw std::logic_error("unreachable term kind");
}

std::uint64_t eval_subset(const Term& t, const Assignment& a, const BooleanSetAlgebra& b) {
    switch (t.kind()) {
    case Term::Kind::Var: {
        const auto it = a.find(t.name());
        if (it == a.end())
            throw std::invalid_argument("unbound variable '" + t.name() + "'");
        return as_subset(it->second, b).members;
    }
    case Term::Kind::Bottom:
        return 0;
    case Term::Kind::Top:
        return universe_mask(b.universe_size);
    case Term::Kind::Not:
        return ~eval_subset(t.child(), a, b) & universe_mask(b.universe_size);
    case Term::Kind::And:
        return eval_subset(t.left(), a, b) & eval_subset(t.right(), a, b);
    case Term::Kind::Or:
        return eval_subset(t.left(), a, b) | eval_subset(t.right(), a, b);
    }
    throw std::logic_error("unreachable term kind");
}

bool relation_holds(Relation rel, const Element& lhs, const Element& rhs) {
    return rel == Relation::Equal ? lhs == rhs : element_leq(lhs, rhs);
}

Element random_element(const Structure& s, Rng& rng) {
    return std::visit(overloaded{
                          [&](const SubspaceLattice& l) -> Element {
                              return random_subspace(l.space_dim, l.field, rng);
                          },
                          [&](const BooleanSetAlgebra& b) -> Element {
                              return Subset{rng() & universe_mask(b.universe_size)};
                          },
                      },
                      s);
}

} // namespace

Element eval_term(const Term& t, const Assignment& assignment, const Structure& s) {
    validate(s);
    return std::visit(overloaded{
                          [&](const SubspaceLattice& l) -> Element { return eval_subspace(t, assignment, l); },
                          [&](const BooleanSetAlgebra& b) -> Element {
                              return Subset{eval_subset(t, assignment, b)};
                          },
                      },
                      s);
}

bool element_leq(const Element& a, const Element& b) {
    if (const auto* sa = std::get_if<Subspace>(&a)) {
        const auto* sb = std::get_if<Subspace>(&b);
        if (!sb)
            throw std::invalid_argument("element_leq: mixed element kinds");
        return leq(*sa, *sb);
    }
    const auto* sb = std::get_if<Subset>(&b);
    if (!sb)
        throw std::invalid_argument("element_leq: mixed element kinds");
    const auto ma = std::get<Subset>(a).members;
    return (ma & ~sb->members) == 0;
}

bool holds(const IdentityStatement& stmt, const Assignment& assignment, const Structure& s) {
    return relation_holds(stmt.relation, eval_term(stmt.lhs, assignment, s), eval_term(stmt.rhs, assignment, s));
}

std::string CheckReport::verdict() const {
    if (counterexample)
        return "counterexample found";
    if (exhaustive)
        return "no counterexample (exhaustive)";
    return "no counterexample in " + std::to_string(trials) + " trials";
}

CheckReport check(const IdentityStatement& stmt, const Structure& s, std::uint64_t trials, std::uint64_t seed) {
    validate(s);
    if (trials < 1)
        throw std::invalid_argument("check: trials must be >= 1");
    const auto vars = stmt.variables();
    CheckReport report{stmt, s, 0, seed, false, std::nullopt};

    auto try_assignment = [&](std::uint64_t trial, Assignment a) {
        Element lhs = eval_term(stmt.lhs, a, s);
        Element rhs = eval_term(stmt.rhs, a, s);
        if (relation_holds(stmt.relation, lhs, rhs))
            return false;
        report.counterexample = Counterexample{trial, std::move(a), std::move(lhs), std::move(rhs)};
        return true;
    };

    if (const auto* b = std::get_if<BooleanSetAlgebra>(&s); b && b->universe_size * vars.size() <= kExhaustiveBits) {
        report.exhaustive = true;
        const std::size_t n = b->universe_size;
        const std::uint64_t total = std::uint64_t{1} << (n * vars.size());
        for (std::uint64_t index = 0; index < total; ++index) {
            Assignment a;
            for (std::size_t v = 0; v < vars.size(); ++v)
                a.emplace(vars[v], Subset{(index >> (v * n)) & universe_mask(n)});
            report.trials = index + 1;
            if (try_assignment(index, std::move(a)))
                break;
        }
        if (!report.counterexample)
            report.trials = total;
        return report;
    }

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Rng rng = trial_stream(seed, trial);
        Assignment a;
        for (const auto& v : vars)
            a.emplace(v, random_element(s, rng));
        report.trials = trial + 1;
        if (try_assignment(trial, std::move(a)))
            break;
    }
    return report;
}

bool verify(const CheckReport& report) {
    if (!report.counterexample)
        return true;
    const auto& c = *report.counterexample;
    const Element lhs = eval_term(report.statement.lhs, c.assignment, report.structure);
    const Element rhs = eval_term(report.statement.rhs, c.assignment, report.structure);
    return lhs == c.lhs && rhs == c.rhs && !relation_holds(report.statement.relation, lhs, rhs);
}

OrthomodularReport check_orthomodular_law(const SubspaceLattice& l, std::uint64_t trials, std::uint64_t seed) {
    OrthomodularReport report{trials, 0, std::nullopt};
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Rng rng = trial_stream(seed, trial);
        const Subspace t = random_subspace(l.space_dim, l.field, rng);
        const Subspace s = trial % 2 == 0 ? random_subspace_within(t, l.field, rng)
                                          : random_subspace(l.space_dim, l.field, rng);
        if (leq(s, t))
            ++report.comparable_pairs;
        if (!check_orthomodular(s, t)) {
            report.violation_trial = trial;
            break;
        }
    }
    return report;
}

std::string to_string(const Element& e) {
    if (const auto* s = std::get_if<Subspace>(&e))
        return to_json(*s).at("basis").dump();
    std::string out = "{";
    const auto m = std::get<Subset>(e).members;
    bool first = true;
    for (int k = 0; k < 64; ++k)
        if (m >> k & 1) {
            out += (first ? "" : ",") + std::to_string(k + 1);
            first = false;
        }
    return out + "}";
}

nlohmann::json to_json(const Element& e) {
    if (const auto* s = std::get_if<Subspace>(&e))
        return to_json(*s);
    auto arr = nlohmann::json::array();
    const auto m = std::get<Subset>(e).members;
    for (int k = 0; k < 64; ++k)
        if (m >> k & 1)
            arr.push_back(k + 1);
    return arr;
}

nlohmann::json to_json(const Structure& s) {
    return std::visit(overloaded{
                          [](const SubspaceLattice& l) -> nlohmann::json {
                              return {{"kind", "subspace"}, {"dim", l.space_dim}, {"field", to_string(l.field)}};
                          },
                          [](const BooleanSetAlgebra& b) -> nlohmann::json {
                              return {{"kind", "boolean"}, {"universe_size", b.universe_size}};
                          },
                      },
                      s);
}

nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json j{{"statement", to_string(r.statement)},
                     {"structure", to_json(r.structure)},
                     {"trials", r.trials},
                     {"seed", r.seed},
                     {"exhaustive", r.exhaustive},
                     {"verdict", r.verdict()},
                     {"counterexample", nullptr}};
    if (r.counterexample) {
        nlohmann::json assignment = nlohmann::json::object();
        for (const auto& [name, value] : r.counterexample->assignment)
            assignment[name] = to_json(value);
        j["counterexample"] = {{"trial", r.counterexample->trial},
                               {"assignment", assignment},
                               {"lhs", to_json(r.counterexample->lhs)},
                               {"rhs", to_json(r.counterexample->rhs)}};
    }
    return j;
}

} // namespace qlogic
