#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../support.hpp"

#include "qlogic/process.hpp"
#include "qlogic/spin.hpp"

using namespace qlogic;

namespace {

Subspace ray(const Vector& v) { return span(std::span(&v, 1), v.dim()); }

Rational total(std::span<const History> hs) {
    Rational sum = 0;
    for (const auto& h : hs)
        sum += h.probability;
    return sum;
}

} // namespace

TEST_CASE("observable validation") {
    const auto sy = Observable::spin('y');
    CHECK(sy.outcomes().size() == 2);
    CHECK(sy.as_matrix() == spin::sy());
    CHECK(Observable::spin('x').as_matrix() == spin::sx());
    CHECK(Observable::spin('z').as_matrix() == spin::sz());

    // Not idempotent.
    CHECK_THROWS_AS(Observable("bad", {{"a", 1, Scalar(2) * spin::pz_up()}, {"b", 0, spin::pz_down()}}),
                    std::invalid_argument);
    // Does not resolve the identity.
    CHECK_THROWS_AS(Observable("bad", {{"a", 1, spin::pz_up()}}), std::invalid_argument);
    // Overlapping projectors.
    CHECK_THROWS_AS(
        Observable("bad", {{"a", 1, spin::pz_up()}, {"b", 0, spin::px_up()}, {"c", 2, spin::pz_down()}}),
        std::invalid_argument);
    // Duplicate labels.
    CHECK_THROWS_AS(Observable("bad", {{"a", 1, spin::pz_up()}, {"a", 0, spin::pz_down()}}), std::invalid_argument);
    CHECK_THROWS(Observable::spin('w'));
}

TEST_CASE("run examples") {
    const std::vector<Stage> xy{Prepare{spin::x_up()}, Measure{Observable::spin('y')}};
    const auto hs = run(xy);
    REQUIRE(hs.size() == 2);
    CHECK(hs[0].probability == Rational(1, 2));
    CHECK(hs[1].probability == Rational(1, 2));
    CHECK(hs[0].trace[1].outcome == "y+");
    CHECK(hs[1].trace[1].outcome == "y-");
    CHECK(hs[0].trace[0].outcome == "-");
    // Post-states are P psi, unnormalized.
    CHECK(hs[0].trace[1].state == spin::py_up().apply(spin::x_up()));

    const std::vector<Stage> eigen{Prepare{spin::y_up()}, Measure{Observable::spin('y')}};
    const auto one = run(eigen);
    REQUIRE(one.size() == 1);
    CHECK(one[0].probability == 1);

    const auto hatch = run(hatch_demo().process);
    REQUIRE(hatch.size() == 2);
    CHECK(hatch[0].trace[1].point == "q");
    CHECK(hatch[1].trace[1].point == "r");
    CHECK(hatch[0].probability == Rational(1, 2));
    CHECK(hatch[1].probability == Rational(1, 2));
}

TEST_CASE("malformed processes") {
    CHECK_THROWS_AS(run(std::vector<Stage>{}), std::invalid_argument);
    CHECK_THROWS_AS(run(std::vector<Stage>{Measure{Observable::spin('x')}}), std::invalid_argument);
    CHECK_THROWS_AS(run(std::vector<Stage>{Prepare{Vector{1, 0, 0}}, Measure{Observable::spin('x')}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run(std::vector<Stage>{Prepare{Vector{0, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(
        run(std::vector<Stage>{Prepare{spin::x_up()}, ConditionalUnitary{std::nullopt, Matrix{{1, 1}, {0, 1}}}}),
        std::invalid_argument);
    CHECK_THROWS_AS(run(std::vector<Stage>{Prepare{spin::x_up()}, ClassicalPrepare{"p"}}), std::invalid_argument);

    ClassicalStep leaky;
    leaky.kernel["p"] = {{"q", Rational(1, 2)}};
    CHECK_THROWS_AS(run(std::vector<Stage>{ClassicalPrepare{"p"}, leaky}), std::invalid_argument);
    ClassicalStep negative;
    negative.kernel["p"] = {{"q", Rational(3, 2)}, {"r", Rational(-1, 2)}};
    CHECK_THROWS_AS(run(std::vector<Stage>{ClassicalPrepare{"p"}, negative}), std::invalid_argument);
    ClassicalStep partial;
    partial.kernel["p"] = {{"q", Rational(1)}};
    CHECK_THROWS(run(std::vector<Stage>{ClassicalPrepare{"p"}, partial, partial}));
}

TEST_CASE("spin demo histories") {
    const Demo demo = spin_demo();
    const auto hs = run(demo.process);
    REQUIRE(hs.size() == 2);
    CHECK(ray(hs[0].trace[2].state) == ray(spin::y_up()));
    CHECK(ray(hs[1].trace[2].state) == ray(spin::x_up()));
    // diag(1,i) (1,-i) = (1,1), checked by hand against the library product.
    CHECK(spin::quarter_turn().apply(spin::y_down()) == spin::x_up());

    const auto& q_o = demo.formula("q_o");
    const auto& q_f = demo.formula("q_f");
    for (const auto& h : hs)
        CHECK(eval(q_o, h) == eval(q_f, h));

    CHECK(holds_surely(demo.formula("q_o | r_o"), hs));
    CHECK_FALSE(holds_surely(demo.formula("q_i | r_i"), hs));
    CHECK(surely_value(demo.formula("q_i | r_i"), hs) == SurelyValue::Bottom);
    CHECK(holds_surely(demo.formula("p_f | q_f"), hs));
    CHECK(prob_of(demo.formula("p_i & q_o"), hs) == Rational(1, 2));
    CHECK(prob_of(IndexedFormula::top(), hs) == 1);
    CHECK(prob_of(demo.formula("q_o & r_o"), hs) == 0);
    CHECK(surely_value(demo.formula("q_o"), hs) == SurelyValue::Contingent);
    CHECK_THROWS_AS(eval(IndexedFormula::atom(Proposition::top(), 3), hs[0]), std::out_of_range);
    CHECK_THROWS_AS(demo.formula("nope"), std::out_of_range);
}

TEST_CASE("distributivity verdicts") {
    for (const Demo& demo : {spin_demo(), hatch_demo()}) {
        const auto hs = run(demo.process);
        const auto& mixed = demo.identity("mixed-stage");
        const auto& initial = demo.identity("initial-stage");
        const auto& outcome = demo.identity("outcome-stage");

        const auto vm = check_distributivity(mixed.left, mixed.right, hs);
        CHECK(vm.left == SurelyValue::Top);
        CHECK(vm.right == SurelyValue::Bottom);
        CHECK(vm.index_mismatched);
        CHECK(vm.status() == "index-mismatched");

        const auto vi = check_distributivity(initial.left, initial.right, hs);
        CHECK(vi.left == SurelyValue::Bottom);
        CHECK(vi.right == SurelyValue::Bottom);
        CHECK(vi.status() == "satisfied");

        const auto vo = check_distributivity(outcome.left, outcome.right, hs);
        CHECK(vo.left == SurelyValue::Top);
        CHECK(vo.right == SurelyValue::Top);
        CHECK(vo.per_history_agree);
        CHECK_FALSE(vo.index_mismatched);
        CHECK(vo.status() == "satisfied");
    }
}

TEST_CASE("common-stage atoms respect distributivity") {
    for (const Demo& demo : {spin_demo(), hatch_demo()}) {
        const auto hs = run(demo.process);
        const std::size_t stages = demo.process.size();
        std::vector<Proposition> props;
        for (const auto& f : demo.formulas)
            if (f.formula.kind() == IndexedFormula::Kind::Atom)
                props.push_back(f.formula.proposition());
        for (std::size_t k = 0; k < stages; ++k)
            for (const auto& p : props)
                for (const auto& q : props)
                    for (const auto& r : props) {
                        const auto a = IndexedFormula::atom(p, k), b = IndexedFormula::atom(q, k),
                                   c = IndexedFormula::atom(r, k);
                        const auto v = check_distributivity(a & (b | c), (a & b) | (a & c), hs);
                        CHECK(v.status() == "satisfied");
                    }
    }
}

TEST_CASE("outcome exclusivity and Born normalization on random processes") {
    const Matrix rot = Scalar(Rational(1, 5)) * Matrix{{3, -4}, {4, 3}};
    const Matrix unitaries[] = {spin::quarter_turn(), rot, Matrix{{0, 1}, {1, 0}}, Matrix::identity(2)};
    const char axes[] = {'x', 'y', 'z'};
    std::mt19937_64 rng(77);
    for (int k = 0; k < 150; ++k) {
        Vector psi = testing::small_vector(2, rng);
        if (psi.is_zero())
            psi = spin::x_up();
        std::vector<Stage> stages{Prepare{psi}};
        std::vector<std::string> labels;
        const int len = 1 + static_cast<int>(rng() % 4);
        for (int s = 0; s < len; ++s) {
            if (rng() % 3 == 0 && s > 0) {
                const auto& u = unitaries[rng() % 4];
                std::optional<OutcomeCondition> cond;
                if (!labels.empty() && rng() % 2)
                    cond = OutcomeCondition{std::nullopt, labels[rng() % labels.size()]};
                stages.push_back(ConditionalUnitary{cond, u});
            } else {
                const char axis = axes[rng() % 3];
                stages.push_back(Measure{Observable::spin(axis)});
                labels.push_back(std::string(1, axis) + "+");
                labels.push_back(std::string(1, axis) + "-");
            }
        }
        const auto hs = run(stages);
        CHECK(total(hs) == 1);
        for (const auto& h : hs) {
            CHECK(sgn(h.probability) > 0);
            CHECK(h.trace.size() == stages.size());
        }
        // Exclusivity: the two outcome rays of one measurement never co-occur.
        for (std::size_t s = 0; s < stages.size(); ++s) {
            const auto* m = std::get_if<Measure>(&stages[s]);
            if (!m)
                continue;
            const auto& outs = m->observable.outcomes();
            const auto a = IndexedFormula::atom(
                Proposition::in_subspace(Subspace::from_generators(outs[0].projector.transpose())), s);
            const auto b = IndexedFormula::atom(
                Proposition::in_subspace(Subspace::from_generators(outs[1].projector.transpose())), s);
            CHECK(prob_of(a & b, hs) == 0);
            CHECK(holds_surely(a | b, hs));
        }
    }
}

TEST_CASE("unitary stages preserve the norm") {
    const Matrix rot = Scalar(Rational(1, 5)) * Matrix{{3, -4}, {4, 3}};
    std::mt19937_64 rng(8);
    for (int k = 0; k < 100; ++k) {
        const Vector psi = testing::small_vector(2, rng);
        if (psi.is_zero())
            continue;
        const auto hs = run(std::vector<Stage>{Prepare{psi}, ConditionalUnitary{std::nullopt, rot},
                                               ConditionalUnitary{std::nullopt, spin::quarter_turn()}});
        REQUIRE(hs.size() == 1);
        CHECK(inner(hs[0].trace[2].state, hs[0].trace[2].state) == inner(psi, psi));
    }
}

TEST_CASE("process json round trip") {
    const auto text = R"({"stages":[
        {"kind":"prepare","state":["1","1"]},
        {"kind":"measure","observable":"S_y"},
        {"kind":"conditional_unitary","condition":{"stage":1,"label":"y-"},"unitary":{"rows":[["1","0"],["0","i"]]}}
    ]})";
    const auto stages = process_from_json(nlohmann::json::parse(text));
    REQUIRE(stages.size() == 3);
    const auto hs = run(stages);
    const auto reference = run(spin_demo().process);
    REQUIRE(hs.size() == reference.size());
    for (std::size_t k = 0; k < hs.size(); ++k)
        CHECK(to_json(hs[k]) == to_json(reference[k]));

    auto again = nlohmann::json::array();
    for (const auto& s : stages)
        again.push_back(to_json(s));
    CHECK(process_from_json(again).size() == 3);

    const auto hatch = R"([{"kind":"classical_prepare","point":"p"},
        {"kind":"classical_step","kernel":{"p":[{"to":"q","prob":"1/2"},{"to":"r","prob":"1/2"}]}}])";
    const auto hh = run(process_from_json(nlohmann::json::parse(hatch)));
    REQUIRE(hh.size() == 2);
    CHECK(to_json(hh[0])["trace"][1]["state"] == "q");

    CHECK_THROWS(process_from_json(nlohmann::json::parse(R"([{"kind":"teleport"}])")));
}

TEST_CASE("demo report") {
    const Demo demo = spin_demo();
    const auto j = report_json(demo, run(demo.process));
    CHECK(j["histories"].size() == 2);
    CHECK(j["histories"][0]["prob"] == "1/2");
    CHECK(j["formulas"]["q_o | r_o"]["surely"] == true);
    CHECK(j["formulas"]["p_i & q_o"]["prob"] == "1/2");
    CHECK(j["identities"]["mixed-stage"]["status"] == "index-mismatched");
}
