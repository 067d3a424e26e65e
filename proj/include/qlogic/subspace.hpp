#pragma once

#include "qlogic/linalg.hpp"
#include "qlogic/random.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace qlogic {

enum class ScalarField { RationalReal, GaussianRational };

std::string_view to_string(ScalarField f);
ScalarField parse_field(std::string_view text);

/// A (closed) subspace of an n-dimensional space, stored as its RREF basis
/// with no zero rows. Equality is equality of the canonical bases.
class Subspace {
public:
    static Subspace zero(std::size_t space_dim);
    static Subspace full(std::size_t space_dim);
    /// Canonicalizes the row space of `generators`.
    static Subspace from_generators(const Matrix& generators);

    std::size_t space_dim() const { return basis_.ncols(); }
    std::size_t dim() const { return basis_.nrows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Vector& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    explicit Subspace(Matrix canonical) : basis_(std::move(canonical)) {}

    Matrix basis_;
};

Subspace span(std::span<const Vector> vectors, std::size_t space_dim);

Subspace meet(const Subspace& s, const Subspace& t);
Subspace join(const Subspace& s, const Subspace& t);
Subspace ortho(const Subspace& s);
bool leq(const Subspace& s, const Subspace& t);

/// s <= t implies t = s v (t ^ s').
bool check_orthomodular(const Subspace& s, const Subspace& t);
/// p ^ (q v r) == (p ^ q) v (p ^ r).
bool distributes(const Subspace& p, const Subspace& q, const Subspace& r);

/// Random nonzero vector with coefficients a/b, a in [-3, 3], b in {1, 2, 3};
/// imaginary parts are zero over the real field.
Vector random_vector(std::size_t space_dim, ScalarField field, Rng& rng);
/// Random subspace of dimension `k`; draws are repeated until the generators
/// are independent.
Subspace random_subspace(std::size_t space_dim, std::size_t k, ScalarField field, Rng& rng);
/// Dimension drawn uniformly from {1, ..., n-1} (from {0, 1} when n = 1).
Subspace random_subspace(std::size_t space_dim, ScalarField field, Rng& rng);
/// Random subspace contained in `within` (possibly zero or all of it).
Subspace random_subspace_within(const Subspace& within, ScalarField field, Rng& rng);

struct NondistributiveWitness {
    Subspace p, q, r;
    std::uint64_t trial;
};

/// First trial (lowest index) whose sampled triple violates distributivity.
/// Throws std::invalid_argument for space_dim < 2.
std::optional<NondistributiveWitness> find_nondistributive_witness(
    std::size_t space_dim, std::uint64_t trials, std::uint64_t seed,
    ScalarField field = ScalarField::GaussianRational);

// {"space_dim": 2, "basis": [["1","1"]]}
nlohmann::json to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j);

} // namespace qlogic
