#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../support.hpp"

#include "qlogic/error.hpp"
#include "qlogic/identity.hpp"

using namespace qlogic;

namespace {

Term v(const char* n) { return Term::var(n); }

Subspace ray(const Vector& x) { return span(std::span(&x, 1), x.dim()); }

} // namespace

TEST_CASE("parse examples") {
    const auto d = parse_statement("x & (y | z) = (x & y) | (x & z)");
    CHECK(d.relation == Relation::Equal);
    CHECK(d.lhs == Term::meet(v("x"), Term::join(v("y"), v("z"))));
    CHECK(d.rhs == Term::join(Term::meet(v("x"), v("y")), Term::meet(v("x"), v("z"))));

    const auto m = parse_statement("!(x | y) = !x & !y");
    CHECK(m.lhs == Term::negation(Term::join(v("x"), v("y"))));
    CHECK(m.rhs == Term::meet(Term::negation(v("x")), Term::negation(v("y"))));

    try {
        parse_statement("x & = y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("precedence and associativity") {
    CHECK(parse_term("a | b & c") == Term::join(v("a"), Term::meet(v("b"), v("c"))));
    CHECK(parse_term("!a & b") == Term::meet(Term::negation(v("a")), v("b")));
    CHECK(parse_term("a & b & c") == Term::meet(Term::meet(v("a"), v("b")), v("c")));
    CHECK(parse_term("a | b | c") == Term::join(Term::join(v("a"), v("b")), v("c")));
    CHECK(parse_term("!!0 | 1") == Term::join(Term::negation(Term::negation(Term::bottom())), Term::top()));
    CHECK(parse_statement("x_1 <= X2").relation == Relation::Leq);
}

TEST_CASE("unicode aliases") {
    CHECK(parse_statement("x ∧ (y ∨ z) ≤ ¬⊥ ∨ ⊤") == parse_statement("x & (y | z) <= !0 | 1"));
}

TEST_CASE("lexer and parser errors") {
    auto position = [](const char* text) -> std::size_t {
        try {
            parse_statement(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 0;
    };
    CHECK(position("x $ y = x") == 3);
    CHECK(position("x = y)") == 6);
    CHECK(position("(x = y") == 4);
    CHECK(position("x & y") == 6);
    CHECK(position("") == 1);
    CHECK(position("x = y = z") == 7);
    CHECK(position("¬ = x") == 3);
    CHECK_THROWS_WITH(parse_statement("x # y = x"), doctest::Contains("'#'"));
    CHECK_THROWS_AS(Term::var("1x"), std::invalid_argument);
}

TEST_CASE("statement files") {
    const auto stmts = parse_statements("# laws\nx & y = y & x\n\n  x <= x | y  # comment\n");
    CHECK(stmts.size() == 2);
    CHECK_THROWS_WITH(parse_statements("x = x\nx & = y\n"), doctest::Contains("line 2"));
}

TEST_CASE("printing round-trips the tree") {
    const char* samples[] = {"x & (y | z) = x & y | x & z", "!(x | y) = !x & !y", "a & (b & c) <= (a & b) & c",
                             "!!x = x", "(a | b) | c = a | (b | c)", "!(0 | 1) & x <= 1"};
    for (const char* s : samples) {
        const auto stmt = parse_statement(s);
        CHECK(parse_statement(to_string(stmt)) == stmt);
    }
    CHECK(to_string(parse_statement("((x) & ((y)|z)) = x")) == "x & (y | z) = x");
    CHECK(to_string(parse_term("a & (b & c)")) == "a & (b & c)");
    CHECK(to_string(parse_term("(a & b) & c")) == "a & b & c");

    // Random trees.
    std::mt19937_64 rng(3);
    std::function<Term(int)> grow = [&](int depth) -> Term {
        const auto pick = depth == 0 ? rng() % 3 : rng() % 6;
        switch (pick) {
        case 0: return Term::var(std::string(1, static_cast<char>('a' + rng() % 4)));
        case 1: return Term::bottom();
        case 2: return Term::top();
        case 3: return Term::negation(grow(depth - 1));
        case 4: return Term::meet(grow(depth - 1), grow(depth - 1));
        default: return Term::join(grow(depth - 1), grow(depth - 1));
        }
    };
    for (int k = 0; k < 500; ++k) {
        const Term t = grow(4);
        CHECK(parse_term(to_string(t)) == t);
    }
}

TEST_CASE("evaluation in both structures") {
    const Vector e1{1, 0}, e2{0, 1};
    const Structure lattice = SubspaceLattice{2};
    const Assignment sub{{"x", ray(e1)}, {"y", ray(e2)}};
    CHECK(std::get<Subspace>(eval_term(parse_term("x | y"), sub, lattice)) == Subspace::full(2));
    CHECK(std::get<Subspace>(eval_term(parse_term("!1"), sub, lattice)) == Subspace::zero(2));

    const Structure sets = BooleanSetAlgebra{3};
    const Assignment set{{"x", Subset{0b001}}, {"y", Subset{0b010}}};
    CHECK(std::get<Subset>(eval_term(parse_term("x | y"), set, sets)) == Subset{0b011});
    CHECK(std::get<Subset>(eval_term(parse_term("!1"), set, sets)) == Subset{0});
    CHECK(std::get<Subset>(eval_term(parse_term("!x"), set, sets)) == Subset{0b110});
    CHECK(to_string(Element(Subset{0b101})) == "{1,3}");

    CHECK_THROWS_AS(eval_term(parse_term("x & w"), set, sets), std::invalid_argument);
    CHECK_THROWS_AS(eval_term(parse_term("x"), sub, sets), std::invalid_argument);
}

TEST_CASE("boolean baseline is exhaustive and clean") {
    const char* laws[] = {"x & (y | z) = (x & y) | (x & z)", "!(x | y) = !x & !y", "!(x & y) = !x | !y",
                          "x & (x | y) = x", "x | (x & y) = x", "!!x = x", "x & !x = 0", "x | !x = 1"};
    for (std::size_t n = 1; n <= 4; ++n)
        for (const char* law : laws) {
            const auto r = check(parse_statement(law), BooleanSetAlgebra{n}, 1, 0);
            CHECK(r.exhaustive);
            CHECK_FALSE(r.counterexample.has_value());
            CHECK(r.verdict() == "no counterexample (exhaustive)");
            CHECK(r.trials == (std::uint64_t{1} << (n * r.statement.variables().size())));
        }
    const auto bad = check(parse_statement("x | y = x"), BooleanSetAlgebra{2}, 1, 0);
    REQUIRE(bad.counterexample.has_value());
    CHECK(verify(bad));
}

TEST_CASE("large boolean universes fall back to sampling") {
    const auto r = check(parse_statement("x & (y | z) = (x & y) | (x & z)"), BooleanSetAlgebra{40}, 200, 5);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.trials == 200);
    CHECK(r.verdict() == "no counterexample in 200 trials");
}

TEST_CASE("subspace lattice checks") {
    const auto dist = parse_statement("x & (y | z) = (x & y) | (x & z)");
    const auto r = check(dist, SubspaceLattice{2, ScalarField::GaussianRational}, 1000, 0);
    REQUIRE(r.counterexample.has_value());
    CHECK(verify(r));
    const auto& a = r.counterexample->assignment;
    CHECK_FALSE(distributes(std::get<Subspace>(a.at("x")), std::get<Subspace>(a.at("y")),
                            std::get<Subspace>(a.at("z"))));
    CHECK(r.verdict() == "counterexample found");

    // The fixed two-state triple as a regression input.
    const Vector d{1, 1}, e1{1, 0}, e2{0, 1};
    CHECK_FALSE(holds(dist, {{"x", ray(d)}, {"y", ray(e1)}, {"z", ray(e2)}}, SubspaceLattice{2}));

    const auto weak = check(parse_statement("(x&y)|(x&z) <= x&(y|z)"), SubspaceLattice{3}, 1000, 0);
    CHECK_FALSE(weak.counterexample.has_value());
    CHECK(weak.trials == 1000);
    CHECK(verify(weak));

    // A tampered report no longer verifies.
    CheckReport forged = r;
    forged.counterexample->lhs = forged.counterexample->rhs;
    CHECK_FALSE(verify(forged));
}

TEST_CASE("lowest trial wins and seeds reproduce") {
    const auto stmt = parse_statement("x | y = x");
    const auto a = check(stmt, SubspaceLattice{3}, 500, 9);
    const auto b = check(stmt, SubspaceLattice{3}, 500, 9);
    REQUIRE(a.counterexample.has_value());
    CHECK(to_json(a) == to_json(b));
    for (std::uint64_t t = 1; t <= a.counterexample->trial; ++t)
        CHECK_FALSE(check(stmt, SubspaceLattice{3}, t, 9).counterexample.has_value());
}

TEST_CASE("orthomodular law never fails") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto r = check_orthomodular_law(SubspaceLattice{n}, 400, 1);
        CHECK_FALSE(r.violation_trial.has_value());
        CHECK(r.comparable_pairs >= 200);
    }
}

TEST_CASE("report json") {
    const auto r = check(parse_statement("x <= x | y"), BooleanSetAlgebra{2}, 1, 0);
    const auto j = to_json(r);
    CHECK(j["verdict"] == "no counterexample (exhaustive)");
    CHECK(j["counterexample"].is_null());
    CHECK(j["structure"]["kind"] == "boolean");
    CHECK(j["statement"] == "x <= x | y");
}
