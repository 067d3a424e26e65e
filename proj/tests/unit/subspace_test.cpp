#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../support.hpp"

#include "qlogic/error.hpp"
#include "qlogic/subspace.hpp"

using namespace qlogic;

namespace {

Subspace ray(std::initializer_list<Scalar> v) {
    const Vector vec(v);
    return span(std::span(&vec, 1), vec.dim());
}

} // namespace

TEST_CASE("span") {
    CHECK(ray({2, 2}).basis() == Matrix{{1, 1}});
    const Vector e[] = {{1, 0}, {0, 1}};
    CHECK(span(e, 2) == Subspace::full(2));
    CHECK(span({}, 2) == Subspace::zero(2));
    CHECK_THROWS_AS(span(e, 3), DimensionMismatch);
}

TEST_CASE("lattice examples") {
    const Subspace e1 = ray({1, 0}), e2 = ray({0, 1}), d = ray({1, 1});
    const Subspace full = Subspace::full(2), zero = Subspace::zero(2);

    CHECK(meet(e1, e2) == zero);
    CHECK(meet(d, full) == d);
    CHECK(join(e1, e2) == full);
    CHECK(join(d, zero) == d);
    CHECK(join(ray({1, Scalar::i()}), ray({1, -Scalar::i()})) == full);

    CHECK(ortho(ray({1, Scalar::i()})) == ray({1, -Scalar::i()}));
    CHECK(ortho(zero) == full);
    CHECK(ortho(ortho(d)) == d);

    CHECK(leq(zero, d));
    CHECK(leq(d, full));
    CHECK_FALSE(leq(e1, e2));

    CHECK(check_orthomodular(e1, full));
    CHECK(check_orthomodular(d, d));

    CHECK_FALSE(distributes(d, e1, e2));
    CHECK(distributes(zero, e1, full));
    CHECK(distributes(d, d, d));

    CHECK_THROWS_AS(meet(e1, Subspace::full(3)), DimensionMismatch);
    CHECK_THROWS_AS(leq(e1, Subspace::full(3)), DimensionMismatch);
}

TEST_CASE("meet agrees with the Zassenhaus route") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::uint64_t t = 0; t < 300; ++t) {
            Rng rng = trial_stream(99 + n, t);
            const Subspace s = random_subspace(n, ScalarField::GaussianRational, rng);
            const Subspace u = random_subspace(n, ScalarField::GaussianRational, rng);
            CHECK(meet(s, u) == testing::zassenhaus_meet(s, u));
        }
}

TEST_CASE("ortho is the orthogonal complement") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint64_t t = 0; t < 200; ++t) {
            Rng rng = trial_stream(5, t * 8 + n);
            const Subspace s = random_subspace(n, ScalarField::GaussianRational, rng);
            const Subspace o = ortho(s);
            CHECK(testing::mutually_orthogonal(s, o));
            CHECK(s.dim() + o.dim() == n);
        }
}

TEST_CASE("leq agrees with basis membership") {
    for (std::uint64_t t = 0; t < 400; ++t) {
        Rng rng = trial_stream(6, t);
        const Subspace s = random_subspace(3, ScalarField::GaussianRational, rng);
        const Subspace u = t % 2 ? random_subspace_within(s, ScalarField::GaussianRational, rng)
                                 : random_subspace(3, ScalarField::GaussianRational, rng);
        CHECK(leq(u, s) == testing::contained(u, s));
        if (t % 2)
            CHECK(leq(u, s));
    }
}

TEST_CASE("results do not depend on the spanning set") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 200; ++k) {
        const Matrix a = testing::small_matrix(2, 3, rng), b = testing::small_matrix(2, 3, rng);
        const Matrix a2 = testing::random_invertible(2, rng) * a;
        const Subspace s = Subspace::from_generators(a), s2 = Subspace::from_generators(a2);
        const Subspace u = Subspace::from_generators(b);
        CHECK(s == s2);
        CHECK(meet(s2, u) == meet(s, u));
        CHECK(join(s2, u) == join(s, u));
    }
}

TEST_CASE("exhaustive small grid in dimension 3") {
    const auto all = testing::small_grid_subspaces3();
    REQUIRE(all.size() > 20);
    std::size_t orthomodular_failures = 0, distributive_failures = 0, weak_failures = 0;
    for (const auto& p : all)
        for (const auto& q : all) {
            // Orthomodular law written out independently of check_orthomodular.
            if (testing::contained(p, q) && !(q == join(p, testing::zassenhaus_meet(q, ortho(p)))))
                ++orthomodular_failures;
            if (!check_orthomodular(p, q))
                ++orthomodular_failures;
            for (const auto& r : all) {
                const Subspace lhs = testing::zassenhaus_meet(p, join(q, r));
                const Subspace rhs = join(testing::zassenhaus_meet(p, q), testing::zassenhaus_meet(p, r));
                if (!testing::contained(rhs, lhs))
                    ++weak_failures;
                if (!(lhs == rhs))
                    ++distributive_failures;
            }
        }
    CHECK(orthomodular_failures == 0);
    CHECK(weak_failures == 0);
    CHECK(distributive_failures > 0);
}

TEST_CASE("random sampling follows the ledger") {
    Rng rng = trial_stream(1, 2);
    for (int k = 0; k < 200; ++k) {
        const Subspace s = random_subspace(4, ScalarField::RationalReal, rng);
        CHECK(s.dim() >= 1);
        CHECK(s.dim() <= 3);
        for (const auto& v : s.basis().rows())
            CHECK(v.is_real());
    }
    const Subspace fixed = random_subspace(4, 2, ScalarField::GaussianRational, rng);
    CHECK(fixed.dim() == 2);
    const Subspace line = random_subspace(1, ScalarField::GaussianRational, rng);
    CHECK(line.dim() <= 1);
}

TEST_CASE("trial streams are reproducible") {
    Rng a = trial_stream(42, 7), b = trial_stream(42, 7), c = trial_stream(42, 8);
    const Subspace sa = random_subspace(3, ScalarField::GaussianRational, a);
    CHECK(sa == random_subspace(3, ScalarField::GaussianRational, b));
    CHECK(a() == b());
    CHECK(trial_stream(42, 7)() != c());
}

TEST_CASE("nondistributive witness search") {
    const auto w = find_nondistributive_witness(2, 1000, 42);
    REQUIRE(w.has_value());
    CHECK_FALSE(distributes(w->p, w->q, w->r));
    const auto again = find_nondistributive_witness(2, 1000, 42);
    CHECK(again->trial == w->trial);
    CHECK(again->p == w->p);

    const auto w3 = find_nondistributive_witness(3, 1000, 7);
    REQUIRE(w3.has_value());
    CHECK_FALSE(distributes(w3->p, w3->q, w3->r));

    // No earlier trial is a witness.
    for (std::uint64_t t = 1; t <= w3->trial; ++t)
        CHECK_FALSE(find_nondistributive_witness(3, t, 7).has_value());

    CHECK_THROWS_WITH_AS(find_nondistributive_witness(1, 10, 0), doctest::Contains("distributive in dimension"),
                         std::invalid_argument);
}

TEST_CASE("subspace json") {
    const Subspace d = ray({1, 1});
    const auto j = to_json(d);
    CHECK(j.dump() == R"({"basis":[["1","1"]],"space_dim":2})");
    CHECK(subspace_from_json(j) == d);
    // Non-canonical input is canonicalized.
    CHECK(subspace_from_json(nlohmann::json::parse(R"({"space_dim":2,"basis":[["2","2"],["3","3"]]})")) == d);
    CHECK(subspace_from_json(nlohmann::json::parse(R"({"space_dim":3,"basis":[]})")) == Subspace::zero(3));
    CHECK_THROWS(subspace_from_json(nlohmann::json::parse(R"({"space_dim":3,"basis":[["1"]]})")));
}
