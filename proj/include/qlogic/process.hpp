#pragma once

#include "qlogic/propositions.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qlogic {

struct Outcome {
    std::string label;
    Rational value;
    Matrix projector;
};

/// Projective observable given by its spectral decomposition. The constructor
/// checks that the projectors are Hermitian, idempotent, mutually orthogonal
/// and resolve the identity; violations throw std::invalid_argument.
class Observable {
public:
    Observable(std::string name, std::vector<Outcome> outcomes);

    /// S_x, S_y or S_z with outcome labels "x+", "x-", ... and values +-1/2.
    static Observable spin(char axis);

    const std::string& name() const { return name_; }
    const std::vector<Outcome>& outcomes() const { return outcomes_; }
    std::size_t dim() const { return outcomes_.front().projector.nrows(); }

    /// sum_k value_k * P_k
    Matrix as_matrix() const;

private:
    std::string name_;
    std::vector<Outcome> outcomes_;
};

/// Matches a history whose measurement at `stage` (or at any stage, when
/// unset) produced `label`.
struct OutcomeCondition {
    std::optional<std::size_t> stage;
    std::string label;
};

struct Prepare {
    Vector state;
};
struct Measure {
    Observable observable;
};
struct ConditionalUnitary {
    std::optional<OutcomeCondition> condition;  // unset: always applied
    Matrix unitary;
};
struct ClassicalPrepare {
    std::string point;
};
struct ClassicalStep {
    std::map<std::string, std::vector<std::pair<std::string, Rational>>> kernel;
};

using Stage = std::variant<Prepare, Measure, ConditionalUnitary, ClassicalPrepare, ClassicalStep>;

/// One step of a history. `state` is the unnormalized post-stage vector; for
/// classical processes it is the indicator vector of `point` over the
/// (sorted) sample space.
struct TraceEntry {
    std::size_t stage;
    std::string outcome;  // "-" unless the stage is a measurement or a classical step
    Vector state;
    std::optional<std::string> point;
};

struct History {
    Rational probability;
    std::vector<TraceEntry> trace;
};

/// Sorted labels of every sample point mentioned by classical stages.
std::vector<std::string> sample_space(std::span<const Stage> process);

/// Indicator vector of `point` in `space`.
Vector point_state(std::span<const std::string> space, std::string_view point);

/// Enumerates every branch with its exact probability, depth first in outcome
/// order. Zero-probability branches are dropped; the probabilities sum to 1.
std::vector<History> run(std::span<const Stage> process);

/// Boolean formula over stage-indexed propositions.
class IndexedFormula {
public:
    enum class Kind { Atom, And, Or, Not, True, False };

    static IndexedFormula atom(Proposition p, std::size_t stage);
    static IndexedFormula all_of(std::vector<IndexedFormula> children);
    static IndexedFormula any_of(std::vector<IndexedFormula> children);
    static IndexedFormula negation(IndexedFormula child);
    static IndexedFormula top();
    static IndexedFormula bottom();

    friend IndexedFormula operator&(IndexedFormula a, IndexedFormula b) {
        return all_of({std::move(a), std::move(b)});
    }
    friend IndexedFormula operator|(IndexedFormula a, IndexedFormula b) {
        return any_of({std::move(a), std::move(b)});
    }
    friend IndexedFormula operator!(IndexedFormula a) { return negation(std::move(a)); }

    Kind kind() const;
    const Proposition& proposition() const;
    std::size_t stage() const;
    const std::vector<IndexedFormula>& children() const;

    /// Largest stage index referenced, if any.
    std::optional<std::size_t> max_stage() const;
    /// (proposition identity, stage) of every atom.
    std::vector<std::pair<const void*, std::size_t>> atoms() const;

private:
    struct Node;
    explicit IndexedFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Truth of `f` in one history. Throws std::out_of_range for stage indices
/// past the end of the trace.
bool eval(const IndexedFormula& f, const History& h);

bool holds_surely(const IndexedFormula& f, std::span<const History> histories);
Rational prob_of(const IndexedFormula& f, std::span<const History> histories);

/// Top: true in every history; Bottom: in none.
enum class SurelyValue { Top, Bottom, Contingent };
SurelyValue surely_value(const IndexedFormula& f, std::span<const History> histories);
std::string_view to_string(SurelyValue v);

struct DistributivityVerdict {
    SurelyValue left, right;
    Rational left_prob, right_prob;
    bool surely_agree;
    bool per_history_agree;
    /// The two sides are built from different (proposition, stage) atoms, so
    /// a disagreement says nothing about the law itself.
    bool index_mismatched;

    /// "satisfied", "index-mismatched" or "violated".
    std::string_view status() const;
};

DistributivityVerdict check_distributivity(const IndexedFormula& left, const IndexedFormula& right,
                                           std::span<const History> histories);

struct NamedFormula {
    std::string name;
    IndexedFormula formula;
};

struct NamedIdentity {
    std::string name;
    IndexedFormula left, right;
};

struct Demo {
    std::vector<Stage> process;
    std::vector<NamedFormula> formulas;
    std::vector<NamedIdentity> identities;

    /// Throws std::out_of_range for unknown names.
    const IndexedFormula& formula(std::string_view name) const;
    const NamedIdentity& identity(std::string_view name) const;
};

/// Prepare x-up, measure S_y, rotate the y-down branch by diag(1, i).
/// Formulas p/q/r (x-up, y-up, y-down) at stages i = 0, o = 1, f = 2, the
/// expectation forms q'_i / r'_i, and identities mixed-stage, initial-stage, outcome-stage.
Demo spin_demo();

/// Ball at p over a hatch falls to q or r with probability 1/2 each.
/// Formulas p/q/r at stages i = 0 and o = 1, identities mixed-stage, initial-stage, outcome-stage.
Demo hatch_demo();

nlohmann::json to_json(const Observable& o);
Observable observable_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Stage& s);
Stage stage_from_json(const nlohmann::json& j);
/// Accepts a bare stage array or {"stages": [...]}.
std::vector<Stage> process_from_json(const nlohmann::json& j);

nlohmann::json to_json(const History& h);
nlohmann::json to_json(const DistributivityVerdict& v);
/// {"histories": [...], "formulas": {name: {"surely", "prob"}}, "identities": {...}}
nlohmann::json report_json(const Demo& demo, std::span<const History> histories);

} // namespace qlogic
