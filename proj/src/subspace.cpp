#include "qlogic/subspace.hpp"

#include "qlogic/error.hpp"

#include <stdexcept>
#include <string>

namespace qlogic {

namespace {

void require_same_space(const char* op, const Subspace& s, const Subspace& t) {
    if (s.space_dim() != t.space_dim())
        throw DimensionMismatch(op, s.space_dim(), t.space_dim());
}

Rational random_coefficient(Rng& rng) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

} // namespace

std::string_view to_string(ScalarField f) {
    return f == ScalarField::RationalReal ? "real" : "gaussian";
}

ScalarField parse_field(std::string_view text) {
    if (text == "real")
        return ScalarField::RationalReal;
    if (text == "gaussian")
        return ScalarField::GaussianRational;
    throw ParseError("unknown scalar field '" + std::string(text) + "' (expected real|gaussian)");
}

Subspace Subspace::zero(std::size_t space_dim) { return Subspace(Matrix(0, space_dim)); }

Subspace Subspace::full(std::size_t space_dim) { return Subspace(Matrix::identity(space_dim)); }

Subspace Subspace::from_generators(const Matrix& generators) {
    return Subspace(nonzero_rows(rref(generators)));
}

bool Subspace::contains(const Vector& v) const {
    if (v.dim() != space_dim())
        throw DimensionMismatch("subspace membership", space_dim(), v.dim());
    if (v.is_zero())
        return true;
    Matrix single = Matrix::from_rows(std::span<const Vector>(&v, 1), space_dim());
    return rank(stack(basis_, single)) == dim();
}

Subspace span(std::span<const Vector> vectors, std::size_t space_dim) {
    return Subspace::from_generators(Matrix::from_rows(vectors, space_dim));
}

Subspace join(const Subspace& s, const Subspace& t) {
    require_same_space("join", s, t);
    if (s.dim() == 0)
        return t;
    if (t.dim() == 0)
        return s;
    return Subspace::from_generators(stack(s.basis(), t.basis()));
}

Subspace ortho(const Subspace& s) {
    // w is orthogonal to every basis row v iff conj(v) . w = 0.
    return Subspace::from_generators(nullspace(s.basis().conj()));
}

Subspace meet(const Subspace& s, const Subspace& t) {
    require_same_space("meet", s, t);
    return ortho(join(ortho(s), ortho(t)));
}

bool leq(const Subspace& s, const Subspace& t) {
    require_same_space("leq", s, t);
    if (s.dim() > t.dim())
        return false;
    if (s.dim() == 0)
        return true;
    return rank(stack(t.basis(), s.basis())) == t.dim();
}

bool check_orthomodular(const Subspace& s, const Subspace& t) {
    if (!leq(s, t))
        return true;
    return t == join(s, meet(t, ortho(s)));
}

bool distributes(const Subspace& p, const Subspace& q, const Subspace& r) {
    require_same_space("distributes", p, q);
    require_same_space("distributes", p, r);
    return meet(p, join(q, r)) == join(meet(p, q), meet(p, r));
}

Vector random_vector(std::size_t space_dim, ScalarField field, Rng& rng) {
    for (;;) {
        Vector v(space_dim);
        for (std::size_t k = 0; k < space_dim; ++k) {
            Rational re = random_coefficient(rng);
            Rational im = field == ScalarField::GaussianRational ? random_coefficient(rng) : Rational(0);
            v[k] = Scalar(std::move(re), std::move(im));
        }
        if (!v.is_zero())
            return v;
    }
}

Subspace random_subspace(std::size_t space_dim, std::size_t k, ScalarField field, Rng& rng) {
    if (k > space_dim)
        throw std::invalid_argument("random_subspace: dimension exceeds space dimension");
    for (;;) {
        std::vector<Vector> gens;
        gens.reserve(k);
        for (std::size_t j = 0; j < k; ++j)
            gens.push_back(random_vector(space_dim, field, rng));
        Subspace s = span(gens, space_dim);
        if (s.dim() == k)
            return s;
    }
}

Subspace random_subspace(std::size_t space_dim, ScalarField field, Rng& rng) {
    if (space_dim == 0)
        throw std::invalid_argument("random_subspace: space dimension must be positive");
    std::size_t k;
    if (space_dim == 1) {
        k = std::uniform_int_distribution<std::size_t>(0, 1)(rng);
    } else {
        k = std::uniform_int_distribution<std::size_t>(1, space_dim - 1)(rng);
    }
    return random_subspace(space_dim, k, field, rng);
}

Subspace random_subspace_within(const Subspace& within, ScalarField field, Rng& rng) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, within.dim())(rng);
    const auto rows = within.basis().rows();
    for (;;) {
        std::vector<Vector> gens;
        for (std::size_t j = 0; j < k; ++j) {
            Vector v(within.space_dim());
            for (const auto& row : rows) {
                Rational re = random_coefficient(rng);
                Rational im = field == ScalarField::GaussianRational ? random_coefficient(rng) : Rational(0);
                v += Scalar(std::move(re), std::move(im)) * row;
            }
            gens.push_back(std::move(v));
        }
        Subspace s = span(gens, within.space_dim());
        if (s.dim() == k)
            return s;
    }
}

std::optional<NondistributiveWitness> find_nondistributive_witness(
    std::size_t space_dim, std::uint64_t trials, std::uint64_t seed, ScalarField field) {
    if (space_dim < 2)
        throw std::invalid_argument("distributive in dimension <= 1");
    if (trials < 1)
        throw std::invalid_argument("find_nondistributive_witness: trials must be >= 1");
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Rng rng = trial_stream(seed, trial);
        Subspace p = random_subspace(space_dim, field, rng);
        Subspace q = random_subspace(space_dim, field, rng);
        Subspace r = random_subspace(space_dim, field, rng);
        if (!distributes(p, q, r))
            return NondistributiveWitness{std::move(p), std::move(q), std::move(r), trial};
    }
    return std::nullopt;
}

nlohmann::json to_json(const Subspace& s) {
    return nlohmann::json{{"space_dim", s.space_dim()}, {"basis", to_json(s.basis()).at("rows")}};
}

Subspace subspace_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("space_dim") || !j.contains("basis"))
        throw ParseError("subspace must be an object with \"space_dim\" and \"basis\"");
    const auto& dim_json = j.at("space_dim");
    if (!dim_json.is_number_unsigned() || dim_json.get<std::size_t>() == 0)
        throw ParseError("subspace \"space_dim\" must be a positive integer");
    const auto n = dim_json.get<std::size_t>();
    std::vector<Vector> rows;
    for (const auto& r : j.at("basis")) {
        rows.push_back(vector_from_json(r));
        if (rows.back().dim() != n)
            throw ParseError("subspace basis row has length " + std::to_string(rows.back().dim()) +
                             ", expected " + std::to_string(n));
    }
    return span(rows, n);
}

} // namespace qlogic
