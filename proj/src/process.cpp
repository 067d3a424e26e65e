#include "qlogic/process.hpp"

#include "qlogic/error.hpp"
#include "qlogic/spin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qlogic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_classical(const Stage& s) {
    return std::holds_alternative<ClassicalPrepare>(s) || std::holds_alternative<ClassicalStep>(s);
}

} // namespace

Observable::Observable(std::string name, std::vector<Outcome> outcomes)
    : name_(std::move(name)), outcomes_(std::move(outcomes)) {
    if (outcomes_.empty())
        throw std::invalid_argument("observable " + name_ + " has no outcomes");
    const std::size_t n = outcomes_.front().projector.nrows();
    Matrix total(n, n);
    std::set<std::string> labels;
    for (std::size_t a = 0; a < outcomes_.size(); ++a) {
        const auto& o = outcomes_[a];
        if (!labels.insert(o.label).second)
            throw std::invalid_argument("observable " + name_ + ": duplicate outcome label " + o.label);
        const Matrix& p = o.projector;
        if (!p.is_square() || p.nrows() != n)
            throw std::invalid_argument("observable " + name_ + ": projector " + o.label + " has wrong shape");
        if (!is_hermitian(p))
            throw std::invalid_argument("observable " + name_ + ": projector " + o.label + " is not Hermitian");
        if (!(p * p == p))
            throw std::invalid_argument("observable " + name_ + ": projector " + o.label + " is not idempotent");
        for (std::size_t b = 0; b < a; ++b)
            if (!(p * outcomes_[b].projector == Matrix(n, n)))
                throw std::invalid_argument("observable " + name_ + ": projectors " + outcomes_[b].label +
                                            " and " + o.label + " are not orthogonal");
        total += p;
    }
    if (!(total == Matrix::identity(n)))
        throw std::invalid_argument("observable " + name_ + ": projectors do not sum to the identity");
}

Observable Observable::spin(char axis) {
    const Rational up(1, 2), down(-1, 2);
    switch (axis) {
    case 'x':
        return Observable("S_x", {{"x+", up, spin::px_up()}, {"x-", down, spin::px_down()}});
    case 'y':
        return Observable("S_y", {{"y+", up, spin::py_up()}, {"y-", down, spin::py_down()}});
    case 'z':
        return Observable("S_z", {{"z+", up, spin::pz_up()}, {"z-", down, spin::pz_down()}});
    }
    throw std::invalid_argument(std::string("unknown spin axis '") + axis + "'");
}

Matrix Observable::as_matrix() const {
    Matrix m(dim(), dim());
    for (const auto& o : outcomes_)
        m += Scalar(o.value) * o.projector;
    return m;
}

std::vector<std::string> sample_space(std::span<const Stage> process) {
    std::set<std::string> points;
    for (const auto& s : process) {
        if (const auto* prep = std::get_if<ClassicalPrepare>(&s))
            points.insert(prep->point);
        if (const auto* step = std::get_if<ClassicalStep>(&s))
            for (const auto& [from, row] : step->kernel) {
                points.insert(from);
                for (const auto& [to, _] : row)
                    points.insert(to);
            }
    }
    return {points.begin(), points.end()};
}

Vector point_state(std::span<const std::string> space, std::string_view point) {
    const auto it = std::find(space.begin(), space.end(), point);
    if (it == space.end())
        throw std::invalid_argument("unknown sample point '" + std::string(point) + "'");
    Vector v(space.size());
    v[static_cast<std::size_t>(it - space.begin())] = Scalar(1);
    return v;
}

namespace {

void validate(std::span<const Stage> process) {
    if (process.empty())
        throw std::invalid_argument("process has no stages");
    const bool classical = is_classical(process.front());
    if (!std::holds_alternative<Prepare>(process.front()) &&
        !std::holds_alternative<ClassicalPrepare>(process.front()))
        throw std::invalid_argument("process must start with a preparation");
    std::optional<std::size_t> dim;
    for (std::size_t k = 0; k < process.size(); ++k) {
        const auto& s = process[k];
        if (is_classical(s) != classical)
            throw std::invalid_argument("stage " + std::to_string(k) + " mixes quantum and classical stages");
        auto check_dim = [&](std::size_t d, const char* what) {
            if (dim && *dim != d)
                throw DimensionMismatch(std::string("stage ") + std::to_string(k) + " " + what, *dim, d);
            dim = d;
        };
        std::visit(overloaded{
                       [&](const Prepare& p) {
                           if (p.state.is_zero())
                               throw std::invalid_argument("stage " + std::to_string(k) + ": zero state");
                           check_dim(p.state.dim(), "preparation");
                       },
                       [&](const Measure& m) { check_dim(m.observable.dim(), "measurement"); },
                       [&](const ConditionalUnitary& u) {
                           if (!u.unitary.is_square() || !is_unitary(u.unitary))
                               throw std::invalid_argument("stage " + std::to_string(k) +
                                                           ": conditional operator is not unitary");
                           check_dim(u.unitary.nrows(), "unitary");
                           if (u.condition && u.condition->stage && *u.condition->stage >= k)
                               throw std::invalid_argument("stage " + std::to_string(k) +
                                                           ": condition refers to a later stage");
                       },
                       [&](const ClassicalPrepare&) {},
                       [&](const ClassicalStep& step) {
                           for (const auto& [from, row] : step.kernel) {
                               Rational total(0);
                               for (const auto& [to, p] : row) {
                                   if (sgn(p) < 0)
                                       throw std::invalid_argument("kernel row " + from + " has a negative entry");
                                   total += p;
                               }
                               if (total != 1)
                                   throw std::invalid_argument("kernel row " + from + " sums to " +
                                                               to_string(total) + ", not 1");
                           }
                       },
                   },
                   s);
    }
}

bool condition_holds(const OutcomeCondition& c, const std::vector<TraceEntry>& trace) {
    if (c.stage)
        return *c.stage < trace.size() && trace[*c.stage].outcome == c.label;
    return std::any_of(trace.begin(), trace.end(), [&](const TraceEntry& e) { return e.outcome == c.label; });
}

struct Runner {
    std::span<const Stage> process;
    std::vector<std::string> space;
    std::vector<History> out;

    void extend(const History& h, std::size_t k, std::string outcome, Vector state, Rational factor,
                std::optional<std::string> point = std::nullopt) {
        History next{h.probability * factor, h.trace};
        next.trace.push_back(TraceEntry{k, std::move(outcome), std::move(state), std::move(point)});
        step(next);
    }

    void step(const History& h) {
        const std::size_t k = h.trace.size();
        if (k == process.size()) {
            out.push_back(h);
            return;
        }
        const Vector* psi = k ? &h.trace.back().state : nullptr;
        std::visit(overloaded{
                       [&](const Prepare& p) { extend(h, k, "-", p.state, Rational(1)); },
                       [&](const Measure& m) {
                           const Rational norm = inner(*psi, *psi).re();
                           for (const auto& o : m.observable.outcomes()) {
                               Vector post = o.projector.apply(*psi);
                               if (post.is_zero())
                                   continue;
                               const Rational weight = inner(*psi, post).re() / norm;
                               extend(h, k, o.label, std::move(post), weight);
                           }
                       },
                       [&](const ConditionalUnitary& u) {
                           const bool apply = !u.condition || condition_holds(*u.condition, h.trace);
                           extend(h, k, "-", apply ? u.unitary.apply(*psi) : *psi, Rational(1));
                       },
                       [&](const ClassicalPrepare& p) {
                           extend(h, k, "-", point_state(space, p.point), Rational(1), p.point);
                       },
                       [&](const ClassicalStep& s) {
                           const std::string& from = *h.trace.back().point;
                           const auto row = s.kernel.find(from);
                           if (row == s.kernel.end())
                               throw std::invalid_argument("stage " + std::to_string(k) +
                                                           ": kernel has no row for '" + from + "'");
                           for (const auto& [to, p] : row->second) {
                               if (sgn(p) == 0)
                                   continue;
                               extend(h, k, to, point_state(space, to), p, to);
                           }
                       },
                   },
                   process[k]);
    }
};

} // namespace

std::vector<History> run(std::span<const Stage> process) {
    validate(process);
    Runner runner{process, sample_space(process), {}};
    runner.step(History{Rational(1), {}});
    return std::move(runner.out);
}

struct IndexedFormula::Node {
    Kind kind;
    std::optional<Proposition> proposition;
    std::size_t stage = 0;
    std::vector<IndexedFormula> children;
};

IndexedFormula IndexedFormula::atom(Proposition p, std::size_t stage) {
    return IndexedFormula(std::make_shared<const Node>(Node{Kind::Atom, std::move(p), stage, {}}));
}
IndexedFormula IndexedFormula::all_of(std::vector<IndexedFormula> children) {
    return IndexedFormula(std::make_shared<const Node>(Node{Kind::And, std::nullopt, 0, std::move(children)}));
}
IndexedFormula IndexedFormula::any_of(std::vector<IndexedFormula> children) {
    return IndexedFormula(std::make_shared<const Node>(Node{Kind::Or, std::nullopt, 0, std::move(children)}));
}
IndexedFormula IndexedFormula::negation(IndexedFormula child) {
    return IndexedFormula(std::make_shared<const Node>(Node{Kind::Not, std::nullopt, 0, {std::move(child)}}));
}
IndexedFormula IndexedFormula::top() {
    return IndexedFormula(std::make_shared<const Node>(Node{Kind::True, std::nullopt, 0, {}}));
}
IndexedFormula IndexedFormula::bottom() {
    return IndexedFormula(std::make_shared<const Node>(Node{Kind::False, std::nullopt, 0, {}}));
}

IndexedFormula::Kind IndexedFormula::kind() const { return node_->kind; }
const Proposition& IndexedFormula::proposition() const { return *node_->proposition; }
std::size_t IndexedFormula::stage() const { return node_->stage; }
const std::vector<IndexedFormula>& IndexedFormula::children() const { return node_->children; }

std::optional<std::size_t> IndexedFormula::max_stage() const {
    if (kind() == Kind::Atom)
        return stage();
    std::optional<std::size_t> best;
    for (const auto& c : children())
        if (const auto m = c.max_stage(); m && (!best || *m > *best))
            best = m;
    return best;
}

std::vector<std::pair<const void*, std::size_t>> IndexedFormula::atoms() const {
    if (kind() == Kind::Atom)
        return {{proposition().identity(), stage()}};
    std::vector<std::pair<const void*, std::size_t>> out;
    for (const auto& c : children()) {
        auto sub = c.atoms();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

namespace {

bool eval_unchecked(const IndexedFormula& f, const History& h) {
    using K = IndexedFormula::Kind;
    switch (f.kind()) {
    case K::Atom:
        return eval(f.proposition(), h.trace[f.stage()].state);
    case K::And:
        return std::all_of(f.children().begin(), f.children().end(),
                           [&](const IndexedFormula& c) { return eval_unchecked(c, h); });
    case K::Or:
        return std::any_of(f.children().begin(), f.children().end(),
                           [&](const IndexedFormula& c) { return eval_unchecked(c, h); });
    case K::Not:
        return !eval_unchecked(f.children().front(), h);
    case K::True:
        return true;
    case K::False:
        return false;
    }
    return false;
}

void check_stages(const IndexedFormula& f, std::span<const History> histories) {
    const auto m = f.max_stage();
    if (!m)
        return;
    for (const auto& h : histories)
        if (*m >= h.trace.size())
            throw std::out_of_range("stage index " + std::to_string(*m) + " out of range for a process of " +
                                    std::to_string(h.trace.size()) + " stages");
}

} // namespace

bool eval(const IndexedFormula& f, const History& h) {
    check_stages(f, std::span<const History>(&h, 1));
    return eval_unchecked(f, h);
}

bool holds_surely(const IndexedFormula& f, std::span<const History> histories) {
    check_stages(f, histories);
    return std::all_of(histories.begin(), histories.end(),
                       [&](const History& h) { return sgn(h.probability) <= 0 || eval_unchecked(f, h); });
}

Rational prob_of(const IndexedFormula& f, std::span<const History> histories) {
    check_stages(f, histories);
    Rational total(0);
    for (const auto& h : histories)
        if (eval_unchecked(f, h))
            total += h.probability;
    return total;
}

SurelyValue surely_value(const IndexedFormula& f, std::span<const History> histories) {
    if (holds_surely(f, histories))
        return SurelyValue::Top;
    if (holds_surely(IndexedFormula::negation(f), histories))
        return SurelyValue::Bottom;
    return SurelyValue::Contingent;
}

std::string_view to_string(SurelyValue v) {
    switch (v) {
    case SurelyValue::Top:
        return "top";
    case SurelyValue::Bottom:
        return "bottom";
    case SurelyValue::Contingent:
        return "contingent";
    }
    return "";
}

std::string_view DistributivityVerdict::status() const {
    if (surely_agree && per_history_agree)
        return "satisfied";
    return index_mismatched ? "index-mismatched" : "violated";
}

DistributivityVerdict check_distributivity(const IndexedFormula& left, const IndexedFormula& right,
                                           std::span<const History> histories) {
    DistributivityVerdict v{surely_value(left, histories),
                            surely_value(right, histories),
                            prob_of(left, histories),
                            prob_of(right, histories),
                            false,
                            true,
                            false};
    v.surely_agree = v.left == v.right;
    for (const auto& h : histories)
        if (eval_unchecked(left, h) != eval_unchecked(right, h))
            v.per_history_agree = false;
    auto l = left.atoms();
    auto r = right.atoms();
    const std::set<std::pair<const void*, std::size_t>> ls(l.begin(), l.end()), rs(r.begin(), r.end());
    v.index_mismatched = ls != rs;
    return v;
}

const IndexedFormula& Demo::formula(std::string_view name) const {
    for (const auto& f : formulas)
        if (f.name == name)
            return f.formula;
    throw std::out_of_range("no formula named '" + std::string(name) + "'");
}

const NamedIdentity& Demo::identity(std::string_view name) const {
    for (const auto& i : identities)
        if (i.name == name)
            return i;
    throw std::out_of_range("no identity named '" + std::string(name) + "'");
}

nlohmann::json to_json(const Observable& o) {
    auto outcomes = nlohmann::json::array();
    for (const auto& out : o.outcomes())
        outcomes.push_back(
            {{"label", out.label}, {"value", to_string(out.value)}, {"projector", to_json(out.projector)}});
    return {{"name", o.name()}, {"outcomes", outcomes}};
}

Observable observable_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "S_x" || name == "S_y" || name == "S_z")
            return Observable::spin(name[2]);
        throw ParseError("unknown built-in observable '" + name + "'");
    }
    std::vector<Outcome> outcomes;
    for (const auto& o : j.at("outcomes"))
        outcomes.push_back(Outcome{o.at("label").get<std::string>(), parse_rational(o.at("value").get<std::string>()),
                                   matrix_from_json(o.at("projector"))});
    return Observable(j.value("name", std::string("A")), std::move(outcomes));
}

nlohmann::json to_json(const Stage& s) {
    return std::visit(
        overloaded{
            [](const Prepare& p) -> nlohmann::json { return {{"kind", "prepare"}, {"state", to_json(p.state)}}; },
            [](const Measure& m) -> nlohmann::json {
                return {{"kind", "measure"}, {"observable", to_json(m.observable)}};
            },
            [](const ConditionalUnitary& u) -> nlohmann::json {
                nlohmann::json j{{"kind", "conditional_unitary"}, {"unitary", to_json(u.unitary)}};
                if (u.condition) {
                    nlohmann::json c{{"label", u.condition->label}};
                    if (u.condition->stage)
                        c["stage"] = *u.condition->stage;
                    j["condition"] = c;
                }
                return j;
            },
            [](const ClassicalPrepare& p) -> nlohmann::json {
                return {{"kind", "classical_prepare"}, {"point", p.point}};
            },
            [](const ClassicalStep& s) -> nlohmann::json {
                nlohmann::json kernel = nlohmann::json::object();
                for (const auto& [from, row] : s.kernel) {
                    auto arr = nlohmann::json::array();
                    for (const auto& [to, p] : row)
                        arr.push_back({{"to", to}, {"prob", to_string(p)}});
                    kernel[from] = arr;
                }
                return {{"kind", "classical_step"}, {"kernel", kernel}};
            },
        },
        s);
}

Stage stage_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("stage must be an object with a \"kind\"");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "prepare")
        return Prepare{vector_from_json(j.at("state"))};
    if (kind == "measure")
        return Measure{observable_from_json(j.at("observable"))};
    if (kind == "conditional_unitary") {
        ConditionalUnitary u{std::nullopt, matrix_from_json(j.at("unitary"))};
        if (j.contains("condition")) {
            const auto& c = j.at("condition");
            OutcomeCondition cond{std::nullopt, c.at("label").get<std::string>()};
            if (c.contains("stage"))
                cond.stage = c.at("stage").get<std::size_t>();
            u.condition = std::move(cond);
        }
        return u;
    }
    if (kind == "classical_prepare")
        return ClassicalPrepare{j.at("point").get<std::string>()};
    if (kind == "classical_step") {
        ClassicalStep step;
        for (const auto& [from, row] : j.at("kernel").items())
            for (const auto& e : row)
                step.kernel[from].emplace_back(e.at("to").get<std::string>(),
                                               parse_rational(e.at("prob").get<std::string>()));
        return step;
    }
    throw ParseError("unknown stage kind '" + kind + "'");
}

std::vector<Stage> process_from_json(const nlohmann::json& j) {
    const auto& stages = j.is_object() && j.contains("stages") ? j.at("stages") : j;
    if (!stages.is_array())
        throw ParseError("process must be a JSON array of stages");
    std::vector<Stage> out;
    for (const auto& s : stages)
        out.push_back(stage_from_json(s));
    return out;
}

nlohmann::json to_json(const History& h) {
    auto trace = nlohmann::json::array();
    for (const auto& e : h.trace) {
        nlohmann::json entry{{"stage", e.stage}, {"outcome", e.outcome}};
        if (e.point)
            entry["state"] = *e.point;
        else
            entry["state"] = to_json(e.state);
        trace.push_back(std::move(entry));
    }
    return {{"prob", to_string(h.probability)}, {"trace", trace}};
}

nlohmann::json to_json(const DistributivityVerdict& v) {
    return {{"left", to_string(v.left)},
            {"right", to_string(v.right)},
            {"left_prob", to_string(v.left_prob)},
            {"right_prob", to_string(v.right_prob)},
            {"surely_agree", v.surely_agree},
            {"per_history_agree", v.per_history_agree},
            {"index_mismatched", v.index_mismatched},
            {"status", v.status()}};
}

nlohmann::json report_json(const Demo& demo, std::span<const History> histories) {
    auto hs = nlohmann::json::array();
    for (const auto& h : histories)
        hs.push_back(to_json(h));
    nlohmann::json formulas = nlohmann::json::object();
    for (const auto& f : demo.formulas)
        formulas[f.name] = {{"surely", holds_surely(f.formula, histories)},
                            {"prob", to_string(prob_of(f.formula, histories))}};
    nlohmann::json identities = nlohmann::json::object();
    for (const auto& i : demo.identities)
        identities[i.name] = to_json(check_distributivity(i.left, i.right, histories));
    return {{"histories", hs}, {"formulas", formulas}, {"identities", identities}};
}

} // namespace qlogic
