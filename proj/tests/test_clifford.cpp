#include <doctest.h>

#include <random>

#include "skewcm/clifford.hpp"
#include "test_helpers.hpp"

using namespace skewcm;
using namespace skewcm::testing;

namespace {

// Generators are labeled 2..n; the "s, t" presentations on three
// variables use s = t_2 and t = t_3.
const std::uint64_t S2 = TwistedAlgebra::mask_of({2});
const std::uint64_t S3 = TwistedAlgebra::mask_of({3});

} // namespace

TEST_CASE("build_c_algebra golden values") {
    const TwistedAlgebra ex(example_eps(), Variant::AInfinity);
    CHECK(ex.dimension() == 8);
    CHECK(ex.commutation_sign(2, 3) == 1);
    CHECK(ex.commutation_sign(2, 4) == -1);
    CHECK(ex.commutation_sign(3, 4) == -1);

    // Commutative on three variables: s t = -t s.
    const TwistedAlgebra comm(SignMatrix::all_commuting(3), Variant::AInfinity);
    CHECK(comm.commutation_sign(2, 3) == -1);

    // Fully anticommuting on three variables: s and t commute.
    const TwistedAlgebra anti(SignMatrix::all_anticommuting(3), Variant::AInfinity);
    CHECK(anti.commutation_sign(2, 3) == 1);

    CHECK_THROWS_AS(TwistedAlgebra(SignMatrix(1), Variant::AInfinity), std::invalid_argument);
}

TEST_CASE("multiply golden values") {
    const TwistedAlgebra a(SignMatrix::all_commuting(3), Variant::AInfinity);

    SUBCASE("identity monomial") {
        for (std::uint64_t s = 0; s < a.dimension(); ++s) {
            const auto p = a.multiply(0, s);
            CHECK(p.sign == 1);
            CHECK(p.monomial == s);
            const auto q = a.multiply(s, 0);
            CHECK(q.sign == 1);
            CHECK(q.monomial == s);
        }
    }
    SUBCASE("anticommuting pair") {
        const auto st = a.multiply(S2, S3);
        CHECK(st.sign == 1);
        CHECK(st.monomial == (S2 | S3));
        const auto ts = a.multiply(S3, S2);
        CHECK(ts.sign == -1);
        CHECK(ts.monomial == (S2 | S3));
    }
    SUBCASE("last generator squares to zero") {
        CHECK(a.multiply(S3, S3).sign == 0);
        const TwistedAlgebra ex(example_eps(), Variant::AInfinity);
        const std::uint64_t t4 = TwistedAlgebra::mask_of({4});
        CHECK(ex.multiply(t4, t4).sign == 0);
    }
    SUBCASE("invertible generators square to one") {
        CHECK(a.multiply(S2, S2).sign == 1);
        CHECK(a.multiply(S2, S2).monomial == 0);
    }
    SUBCASE("A1 variant has no zero products") {
        const TwistedAlgebra b(SignMatrix::all_commuting(3), Variant::A1);
        CHECK(b.multiply(S3, S3).sign == 1);
    }
}

TEST_CASE("associativity") {
    CHECK(associativity_selfcheck(TwistedAlgebra(SignMatrix::all_commuting(3), Variant::AInfinity)));
    CHECK(associativity_selfcheck(TwistedAlgebra(example_eps(), Variant::AInfinity)));
    CHECK(associativity_selfcheck(TwistedAlgebra(example_eps(), Variant::A1)));

    std::mt19937_64 rng(61);
    const SignMatrix eps = random_sign_matrix(8, rng);
    CHECK(associativity_selfcheck(TwistedAlgebra(eps, Variant::AInfinity), 5));
}

TEST_CASE("radical monomials") {
    SUBCASE("n = 2") {
        const TwistedAlgebra a(SignMatrix::all_commuting(2), Variant::AInfinity);
        const auto rad = radical_monomials(a);
        REQUIRE(rad.size() == 1);
        CHECK(rad[0] == TwistedAlgebra::mask_of({2}));
    }
    SUBCASE("n = 3 commutative") {
        const TwistedAlgebra a(SignMatrix::all_commuting(3), Variant::AInfinity);
        const auto rad = radical_monomials(a);
        REQUIRE(rad.size() == 2);
        CHECK(rad[0] == TwistedAlgebra::mask_of({3}));
        CHECK(rad[1] == TwistedAlgebra::mask_of({2, 3}));
    }
    SUBCASE("n = 4 always has dimension 4") {
        for (std::uint64_t idx = 0; idx < 64; ++idx) {
            const TwistedAlgebra a(signs_from_index(4, idx), Variant::AInfinity);
            CHECK(radical_monomials(a).size() == 4);
        }
    }
    SUBCASE("wrong variant") {
        const TwistedAlgebra a(SignMatrix::all_commuting(3), Variant::A1);
        CHECK_THROWS_AS((void)radical_monomials(a), std::invalid_argument);
    }
}

TEST_CASE("monomials outside the radical are invertible") {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const TwistedAlgebra a(random_sign_matrix(n, rng), Variant::AInfinity);
        const std::uint64_t last = std::uint64_t{1} << (n - 2);
        for (std::uint64_t s = 0; s < a.dimension(); ++s) {
            const auto sq = a.multiply(s, s);
            if (s & last) CHECK(sq.sign == 0);
            else {
                CHECK(sq.sign != 0);
                CHECK(sq.monomial == 0);
            }
        }
    }
}

TEST_CASE("block_count golden values") {
    SUBCASE("n = 2") {
        const TwistedAlgebra a(SignMatrix::all_commuting(2), Variant::AInfinity);
        CHECK(block_count(a) == 1);
        const TwistedAlgebra b(SignMatrix::all_anticommuting(2), Variant::AInfinity);
        CHECK(block_count(b) == 1);
    }
    SUBCASE("n = 3 commutative") {
        const TwistedAlgebra a(SignMatrix::all_commuting(3), Variant::AInfinity);
        CHECK(block_count(a) == 2);
    }
    SUBCASE("n = 3 anticommuting") {
        const TwistedAlgebra a(SignMatrix::all_anticommuting(3), Variant::AInfinity);
        CHECK(block_count(a) == 2);
    }
    SUBCASE("worked example") {
        const TwistedAlgebra a(example_eps(), Variant::AInfinity);
        CHECK(block_count(a) == 4);
    }
    SUBCASE("A1 variant") {
        CHECK(block_count(TwistedAlgebra(SignMatrix::all_commuting(2), Variant::A1)) == 2);
        CHECK(block_count(TwistedAlgebra(SignMatrix::all_commuting(3), Variant::A1)) == 1);
        CHECK(block_count(TwistedAlgebra(SignMatrix::all_anticommuting(3), Variant::A1)) == 4);
    }
}

TEST_CASE("verify_against_classification golden values") {
    SUBCASE("worked example") {
        const auto rep = verify_against_classification(example_eps(), classify_a_infinity(example_eps()));
        CHECK(rep.consistent);
        CHECK(rep.dim == 8);
        CHECK(rep.radical_dim == 4);
        CHECK(rep.block_count == 4);
        CHECK_FALSE(rep.semisimple);
        CHECK(rep.warnings.empty());
    }
    SUBCASE("commutative n = 4") {
        const SignMatrix eps = SignMatrix::all_commuting(4);
        const auto rep = verify_against_classification(eps, classify_a_infinity(eps));
        CHECK(rep.consistent);
        CHECK(rep.block_count == 1);
    }
    SUBCASE("commutative n = 2, A1 variant") {
        const SignMatrix eps = SignMatrix::all_commuting(2);
        const auto rep = verify_against_classification(eps, classify_a1(eps));
        CHECK(rep.consistent);
        CHECK(rep.dim == 2);
        CHECK(rep.block_count == 2);
        CHECK(rep.semisimple);
    }
}

TEST_CASE("consistency triangle over all inputs up to n = 5") {
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t total = std::uint64_t{1} << pair_count(n);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const SignMatrix eps = signs_from_index(n, idx);
            REQUIRE(verify_against_classification(eps, classify_a_infinity(eps)).consistent);
            REQUIRE(verify_against_classification(eps, classify_a1(eps)).consistent);
        }
    }
}

TEST_CASE("deleting one of two isolated vertices halves the algebra") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 100; ++t) {
        const int n = 4 + static_cast<int>(rng() % 7);
        SignMatrix eps = random_sign_matrix(n, rng);
        // Force two isolated vertices away from n.
        const int v = 1 + static_cast<int>(rng() % (n - 1));
        int w = 1 + static_cast<int>(rng() % (n - 1));
        if (w == v) w = (v % (n - 1)) + 1;
        for (int u = 1; u <= n; ++u) {
            if (u != v) eps.set_sign(v, u, -1);
            if (u != w) eps.set_sign(w, u, -1);
        }

        // Delete variable v, keeping the relative order of the rest.
        SignMatrix smaller(n - 1);
        std::vector<int> keep;
        for (int u = 1; u <= n; ++u)
            if (u != v) keep.push_back(u);
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 1; j <= n - 1; ++j)
                if (eps.sign(keep[static_cast<std::size_t>(i - 1)], keep[static_cast<std::size_t>(j - 1)]) == -1)
                    smaller.set_sign(i, j, -1);

        const TwistedAlgebra big(eps, Variant::AInfinity);
        const TwistedAlgebra small(smaller, Variant::AInfinity);
        CHECK(block_count(big) == 2 * block_count(small));
        CHECK(radical_monomials(big).size() == 2 * radical_monomials(small).size());
    }
}
