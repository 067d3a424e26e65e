#include "qlogic/process.hpp"

#include "qlogic/spin.hpp"

namespace qlogic {

namespace {

Subspace ray(const Vector& v) { return span(std::span<const Vector>(&v, 1), v.dim()); }

// The three families of identities shared by both demos. `i` and `o` are the
// atoms before and after the branching stage.
std::vector<NamedIdentity> distributivity_instances(const IndexedFormula& p_i, const IndexedFormula& q_i,
                                                    const IndexedFormula& r_i, const IndexedFormula& q_o,
                                                    const IndexedFormula& r_o) {
    return {
        {"mixed-stage", p_i & (q_o | r_o), (p_i & q_i) | (p_i & r_i)},
        {"initial-stage", p_i & (q_i | r_i), (p_i & q_i) | (p_i & r_i)},
        {"outcome-stage", p_i & (q_o | r_o), (p_i & q_o) | (p_i & r_o)},
    };
}

} // namespace

Demo spin_demo() {
    using F = IndexedFormula;
    Demo demo;
    demo.process = {
        Prepare{spin::x_up()},
        Measure{Observable::spin('y')},
        ConditionalUnitary{OutcomeCondition{1, "y-"}, spin::quarter_turn()},
    };

    const auto p = Proposition::in_subspace(ray(spin::x_up()));
    const auto q = Proposition::in_subspace(ray(spin::y_up()));
    const auto r = Proposition::in_subspace(ray(spin::y_down()));
    const auto q_exp = Proposition::expectation_in(spin::sy(), {Interval::point(Rational(1, 2))});
    const auto r_exp = Proposition::expectation_in(spin::sy(), {Interval::point(Rational(-1, 2))});

    const auto p_i = F::atom(p, 0), q_i = F::atom(q, 0), r_i = F::atom(r, 0);
    const auto qx_i = F::atom(q_exp, 0), rx_i = F::atom(r_exp, 0);
    const auto p_o = F::atom(p, 1), q_o = F::atom(q, 1), r_o = F::atom(r, 1);
    const auto p_f = F::atom(p, 2), q_f = F::atom(q, 2), r_f = F::atom(r, 2);

    demo.formulas = {
        {"p_i", p_i},
        {"q_i", q_i},
        {"r_i", r_i},
        {"q'_i", qx_i},
        {"r'_i", rx_i},
        {"p_o", p_o},
        {"q_o", q_o},
        {"r_o", r_o},
        {"p_f", p_f},
        {"q_f", q_f},
        {"r_f", r_f},
        {"q_i | r_i", q_i | r_i},
        {"q'_i | r'_i", qx_i | rx_i},
        {"q_o | r_o", q_o | r_o},
        {"q_o & r_o", q_o & r_o},
        {"p_i & q_o", p_i & q_o},
        {"p_i & r_o", p_i & r_o},
        {"p_o | q_o", p_o | q_o},
        {"p_f | q_f", p_f | q_f},
    };
    demo.identities = distributivity_instances(p_i, q_i, r_i, q_o, r_o);
    return demo;
}

Demo hatch_demo() {
    using F = IndexedFormula;
    Demo demo;
    const Rational half(1, 2);
    ClassicalStep drop;
    drop.kernel["p"] = {{"q", half}, {"r", half}};
    drop.kernel["q"] = {{"q", Rational(1)}};
    drop.kernel["r"] = {{"r", Rational(1)}};
    demo.process = {ClassicalPrepare{"p"}, std::move(drop)};

    const auto space = sample_space(demo.process);
    const auto at = [&](const char* point) { return Proposition::in_subspace(ray(point_state(space, point))); };
    const auto p = at("p"), q = at("q"), r = at("r");

    const auto p_i = F::atom(p, 0), q_i = F::atom(q, 0), r_i = F::atom(r, 0);
    const auto p_o = F::atom(p, 1), q_o = F::atom(q, 1), r_o = F::atom(r, 1);

    demo.formulas = {
        {"p_i", p_i},
        {"q_i", q_i},
        {"r_i", r_i},
        {"p_o", p_o},
        {"q_o", q_o},
        {"r_o", r_o},
        {"q_i | r_i", q_i | r_i},
        {"q_o | r_o", q_o | r_o},
        {"q_o & r_o", q_o & r_o},
        {"p_i & q_o", p_i & q_o},
        {"p_i & r_o", p_i & r_o},
    };
    demo.identities = distributivity_instances(p_i, q_i, r_i, q_o, r_o);
    return demo;
}

} // namespace qlogic
