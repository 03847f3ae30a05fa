#include <doctest.h>

#include "golden_fixtures.hpp"
#include "weilmin/descent.hpp"

using namespace weilmin;

TEST_CASE("vandermonde") {
    const ExactMatrix V7 = vandermonde(QuadForm(7, 1));
    REQUIRE(V7.rows() == 4);
    for (long k = 0; k < 4; ++k) {
        CHECK(V7.at(0, k) == CycElt::one(7));           // theta_0 = 1
        CHECK(V7.at(1, k) == CycElt::zeta_pow(7, k));   // theta_1 = zeta
    }
    // theta_3 = zeta^{9 mod 7} = zeta^2, so the (3,3) entry is its cube
    CHECK(V7.at(3, 3) == CycElt::zeta_pow(7, 6));

    const ExactMatrix V13 = vandermonde(QuadForm(13, 2));
    REQUIRE(V13.rows() == 7);
    for (long k = 0; k < 7; ++k) {
        CHECK(V13.at(1, k) == CycElt::zeta_pow(13, 2 * k));  // theta_1 = zeta^2
    }

    CHECK((V13.inverse() * V13).is_identity());
}

TEST_CASE("conjugate_model golden values for p=7, c=1") {
    const QuadForm q(7, 1);
    const WeilModel even = restrict_even(weil_full(q));
    const ExactMatrix V = vandermonde(q);
    auto [Sp, Tp] = conjugate_model(even, V);

    CHECK(Sp == quad_matrix_to_cyc(golden::to_quad_matrix(7, golden::sprime_7_1()), 7));
    CHECK(Tp == quad_matrix_to_cyc(golden::to_quad_matrix(7, golden::tprime_7_1()), 7));

    SUBCASE("conjugating by the identity changes nothing") {
        auto [S2, T2] = conjugate_model(even, ExactMatrix::identity(7, 4));
        CHECK(S2 == even.S);
        CHECK(T2 == even.T);
    }

    SUBCASE("series precondition") {
        CHECK_THROWS_AS(conjugate_model(weil_full(q), ExactMatrix::identity(7, 7)), std::domain_error);
    }
}

TEST_CASE("minimal_model matches all four golden cases") {
    for (const auto& gc : golden::all_cases()) {
        const MinimalModel model = minimal_model(QuadForm(gc.p, gc.c));
        CHECK(model.ring == RingTag::quadratic_integers);
        CHECK(model.Sprime == golden::to_quad_matrix(gc.p, gc.S));
        CHECK(model.Tprime == golden::to_quad_matrix(gc.p, gc.T));
    }
}

TEST_CASE("ring_of_definition") {
    SUBCASE("identity matrix lives over Z") {
        CHECK(ring_of_definition(ExactMatrix::identity(7, 3)).tag == RingTag::integers);
    }

    SUBCASE("conjugated principal model lives over the quadratic integers") {
        const QuadForm q(13, 1);
        auto [Sp, Tp] = conjugate_model(restrict_even(weil_full(q)), vandermonde(q));
        const RingReport rs = ring_of_definition(Sp);
        const RingReport rt = ring_of_definition(Tp);
        CHECK(rs.tag == RingTag::quadratic_integers);
        CHECK(rt.tag == RingTag::quadratic_integers);
        REQUIRE(rs.witness);  // the entry that keeps it out of Z
        CHECK(rs.witness->reason == "not a rational integer");
    }

    SUBCASE("unconjugated even model needs 1/p") {
        const WeilModel even = restrict_even(weil_full(QuadForm(7, 1)));
        const RingReport rep = ring_of_definition(even.S);
        CHECK(rep.tag == RingTag::cyclotomic_p_inverted);
        REQUIRE(rep.witness);
        CHECK(rep.witness->row == 0);
        CHECK(rep.witness->col == 0);
    }

    SUBCASE("a stray half lands in \"other\" with a witness") {
        ExactMatrix M = ExactMatrix::identity(7, 2);
        M.at(1, 0) = CycElt::from_rational(7, Rational(1, 2));
        const RingReport rep = ring_of_definition(M);
        CHECK(rep.tag == RingTag::other);
        REQUIRE(rep.witness);
        CHECK(rep.witness->row == 1);
        CHECK(rep.witness->col == 0);
    }

    SUBCASE("ring tag strings") {
        CHECK(ring_tag_string(RingTag::quadratic_integers, 7) == "Z[(1+sqrt(-7))/2]");
        CHECK(ring_tag_string(RingTag::quadratic_integers, 13) == "Z[(1+sqrt(13))/2]");
        CHECK(ring_tag_string(RingTag::cyclotomic_p_inverted, 7) == "Z[1/7, zeta_7]");
        CHECK(ring_tag_string(RingTag::integers, 7) == "Z");
    }
}

TEST_CASE("galois_perm") {
    SUBCASE("p=5 explicit permutation") {
        const GaloisCertificate cert = galois_perm(QuadForm(5, 1));
        CHECK(cert.perm == std::vector<size_t>{0, 2, 1});
        CHECK(cert.order == 2);
    }

    SUBCASE("defining identity and structure for p <= 13") {
        for (long p : {5L, 7L, 11L, 13L}) {
            for (long c : {1L, smallest_nonresidue(p)}) {
                const QuadForm q(p, c);
                const GaloisCertificate cert = galois_perm(q);
                CHECK(cert.perm[0] == 0);
                CHECK((p - 1) / 2 % cert.order == 0);  // order divides r
                const ExactMatrix V = vandermonde(q);
                const ExactMatrix P = ExactMatrix::permutation(p, cert.perm);
                CHECK(galois_matrix(tau_generator(p), V) == P * V);
                CHECK(P * P.transpose() == ExactMatrix::identity(p, cert.perm.size()));
            }
        }
    }
}

TEST_CASE("verify_theorem2") {
    const QuadForm q(7, 1);
    const WeilModel even = restrict_even(weil_full(q));
    const GaloisCertificate cert = galois_perm(q);

    for (const CheckResult& r : verify_theorem2(even, cert)) CHECK(r.pass);

    SUBCASE("p=13 c=2 also passes") {
        const QuadForm q13(13, 2);
        for (const CheckResult& r : verify_theorem2(restrict_even(weil_full(q13)), galois_perm(q13))) {
            CHECK(r.pass);
        }
    }

    SUBCASE("replacing P by the identity fails") {
        GaloisCertificate fake;
        fake.perm.resize(even.S.rows());
        for (size_t i = 0; i < fake.perm.size(); ++i) fake.perm[i] = i;
        fake.order = 1;
        const auto report = verify_theorem2(even, fake);
        CHECK_FALSE(report[0].pass);  // tau(S) != S on the even model
        CHECK_FALSE(report[0].witness.empty());
    }
}

TEST_CASE("verify_charpoly_factorization") {
    SUBCASE("p=7: factors are (x-1)(x-z)(x-z^4)(x-z^2)") {
        const QuadForm q(7, 1);
        auto [Sp, Tp] = conjugate_model(restrict_even(weil_full(q)), vandermonde(q));
        for (const CheckResult& r : verify_charpoly_factorization(q, Tp)) CHECK(r.pass);

        const CycPolynomial mp = char_poly(Tp);
        const CycPolynomial expected = CycPolynomial::from_roots(
            7, {CycElt::one(7), CycElt::zeta_pow(7, 1), CycElt::zeta_pow(7, 4), CycElt::zeta_pow(7, 2)});
        CHECK(mp == expected);
    }

    SUBCASE("p=13 both forms") {
        for (long c : {1L, 2L}) {
            const QuadForm q(13, c);
            auto [Sp, Tp] = conjugate_model(restrict_even(weil_full(q)), vandermonde(q));
            for (const CheckResult& r : verify_charpoly_factorization(q, Tp)) CHECK(r.pass);
        }
    }

    SUBCASE("a perturbed companion column is caught") {
        const QuadForm q(7, 1);
        auto [Sp, Tp] = conjugate_model(restrict_even(weil_full(q)), vandermonde(q));
        Tp.at(0, 3) = CycElt::one(7);  // golden value is -1
        bool all = true;
        for (const CheckResult& r : verify_charpoly_factorization(q, Tp)) all = all && r.pass;
        CHECK_FALSE(all);
    }
}

TEST_CASE("conjugated models keep the presentation relations") {
    for (long p : {5L, 7L, 13L}) {
        for (long c : {1L, smallest_nonresidue(p)}) {
            const QuadForm q(p, c);
            auto [Sp, Tp] = conjugate_model(restrict_even(weil_full(q)), vandermonde(q));
            CHECK(check_relations(Sp, Tp, p).all_pass());

            // tau fixes the minimal model entrywise (mechanism of the proofs)
            const GaloisElt tau = tau_generator(p);
            CHECK(galois_matrix(tau, Sp) == Sp);
            CHECK(galois_matrix(tau, Tp) == Tp);
        }
    }
}

TEST_CASE("p=3 runs through the whole pipeline") {
    // Wang's integrality statement assumes p >= 5; p = 3 is constructed and
    // tested all the same. Observed outcome (recorded, not promised by the
    // general theory): the conjugated model is minimal here too.
    const MinimalModel model = minimal_model(QuadForm(3, 1));
    CHECK(model.Sprime.size() == 2);
    const ExactMatrix S = quad_matrix_to_cyc(model.Sprime, 3);
    const ExactMatrix T = quad_matrix_to_cyc(model.Tprime, 3);
    CHECK(check_relations(S, T, 3).all_pass());
    CHECK(model.ring == RingTag::quadratic_integers);
}

TEST_CASE("explore_cuspidal_descent reports without asserting") {
    for (long p : {5L, 7L}) {
        const CuspidalDescent explored = explore_cuspidal_descent(QuadForm(p, 1));
        CHECK(explored.Sconj.rows() == static_cast<size_t>((p - 1) / 2));
        // the observed ring is whatever it is; the only hard guarantee is
        // that similarity preserves the group relations
        CHECK(check_relations(explored.Sconj, explored.Tconj, p).all_pass());
    }
}
