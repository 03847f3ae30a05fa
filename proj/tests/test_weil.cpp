#include <doctest.h>

#include "weilmin/weil.hpp"

using namespace weilmin;

namespace {

ExactMatrix diag(long p, const std::vector<long>& exponents) {
    ExactMatrix m(p, exponents.size(), exponents.size());
    for (size_t i = 0; i < exponents.size(); ++i) m.at(i, i) = CycElt::zeta_pow(p, exponents[i]);
    return m;
}

}  // namespace

TEST_CASE("weil_full generator matrices") {
    const QuadForm q(7, 1);
    const WeilModel m = weil_full(q);

    CHECK(m.T == diag(7, {0, 1, 4, 2, 2, 4, 1}));

    SUBCASE("S squared is eps times the negation permutation") {
        // derived by exact computation: (S^2)_{jk} = eps * [k == -j mod p]
        for (long p : {5L, 7L}) {
            for (long c : {1L, smallest_nonresidue(p)}) {
                const WeilModel full = weil_full(QuadForm(p, c));
                const ExactMatrix S2 = full.S * full.S;
                const Rational eps(quadratic_epsilon(p));
                for (long j = 0; j < p; ++j) {
                    for (long k = 0; k < p; ++k) {
                        const CycElt expect = (k == (p - j) % p) ? CycElt::from_rational(p, eps) : CycElt::zero(p);
                        REQUIRE(S2.at(j, k) == expect);
                    }
                }
            }
        }
    }

    SUBCASE("S^4 is the identity") {
        CHECK(m.S.pow(4).is_identity());
    }
}

TEST_CASE("restrict_even matches the worked p=7 example") {
    const QuadForm q(7, 1);
    const WeilModel even = restrict_even(weil_full(q));
    REQUIRE(even.S.rows() == 4);
    CHECK(even.series == Series::principal);

    CHECK(even.T == diag(7, {0, 1, 4, 2}));

    const CycElt ginv = gauss_sum(7, 1).inverse();
    auto pair = [](long a, long b) { return CycElt::zeta_pow(7, a) + CycElt::zeta_pow(7, b); };
    // displayed matrix: rows of paired powers with first row (1, 2, 2, 2)
    ExactMatrix expected(7, 4, 4);
    expected.at(0, 0) = ginv;
    for (long k = 1; k < 4; ++k) expected.at(0, k) = ginv * Rational(2);
    for (long j = 1; j < 4; ++j) expected.at(j, 0) = ginv;
    expected.at(1, 1) = ginv * pair(5, 2);
    expected.at(1, 2) = ginv * pair(4, 3);
    expected.at(1, 3) = ginv * pair(6, 1);
    expected.at(2, 1) = ginv * pair(4, 3);
    expected.at(2, 2) = ginv * pair(6, 1);
    expected.at(2, 3) = ginv * pair(5, 2);
    expected.at(3, 1) = ginv * pair(6, 1);
    expected.at(3, 2) = ginv * pair(5, 2);
    expected.at(3, 3) = ginv * pair(4, 3);
    CHECK(even.S == expected);

    CHECK_THROWS_AS(restrict_even(even), std::domain_error);
}

TEST_CASE("restrict_odd") {
    const QuadForm q(7, 1);
    const WeilModel odd = restrict_odd(weil_full(q));
    CHECK(odd.series == Series::cuspidal);
    CHECK(odd.T == diag(7, {1, 4, 2}));

    CHECK(restrict_odd(weil_full(QuadForm(13, 1))).S.rows() == 6);

    CHECK_THROWS_AS(restrict_odd(odd), std::domain_error);
}

TEST_CASE("restrictions agree with direct change-of-basis conjugation") {
    for (long p : {5L, 7L}) {
        for (long c : {1L, smallest_nonresidue(p)}) {
            const QuadForm q(p, c);
            const WeilModel full = weil_full(q);
            const WeilModel even = restrict_even(full);
            const WeilModel odd = restrict_odd(full);
            const long r = (p - 1) / 2;

            const ExactMatrix C = parity_basis(p);
            const ExactMatrix Cinv = C.inverse();
            for (const auto& [big, evenM, oddM] :
                 {std::tuple<const ExactMatrix&, const ExactMatrix&, const ExactMatrix&>{full.S, even.S, odd.S},
                  {full.T, even.T, odd.T}}) {
                const ExactMatrix conj = Cinv * big * C;
                for (long i = 0; i < p; ++i) {
                    for (long j = 0; j < p; ++j) {
                        const bool in_even = i <= r && j <= r;
                        const bool in_odd = i > r && j > r;
                        if (in_even) {
                            REQUIRE(conj.at(i, j) == evenM.at(i, j));
                        } else if (in_odd) {
                            REQUIRE(conj.at(i, j) == oddM.at(i - r - 1, j - r - 1));
                        } else {
                            REQUIRE(conj.at(i, j).is_zero());  // block diagonal
                        }
                    }
                }
            }

            // trace additivity under the decomposition
            CHECK(even.S.trace() + odd.S.trace() == full.S.trace());
            CHECK(even.T.trace() + odd.T.trace() == full.T.trace());
        }
    }
}

TEST_CASE("check_relations") {
    SUBCASE("all models pass") {
        for (long p : {5L, 7L, 13L}) {
            for (long c : {1L, smallest_nonresidue(p)}) {
                const WeilModel full = weil_full(QuadForm(p, c));
                CHECK(check_relations(full).all_pass());
                CHECK(check_relations(restrict_even(full)).all_pass());
                CHECK(check_relations(restrict_odd(full)).all_pass());
            }
        }
    }

    SUBCASE("replacing T by T^2 breaks the braid relation") {
        const WeilModel m = weil_full(QuadForm(7, 1));
        const RelationReport broken = check_relations(m.S, m.T * m.T, 7);
        CHECK(broken.s4_identity);  // S untouched
        CHECK_FALSE(broken.s2_equals_st3);
    }
}
