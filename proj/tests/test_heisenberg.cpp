#include <doctest.h>

#include <random>

#include "weilmin/weil.hpp"

using namespace weilmin;

namespace {

std::vector<HeisElt> all_elements(long p) {
    std::vector<HeisElt> out;
    for (long lam = 0; lam < p; ++lam) {
        for (long x = 0; x < p; ++x) {
            for (long y = 0; y < p; ++y) out.push_back({lam, x, y});
        }
    }
    return out;
}

// Independent construction of sigma as the induced representation: the coset
// representatives are (0, 0, y) and the inducing character of the subgroup
// A = {(lam, x, 0)} is psi(lam, x, 0) = zeta^lam. Uses heis_mul only.
ExactMatrix induced_sigma(const QuadForm& q, const HeisElt& h) {
    const long p = q.p;
    ExactMatrix m(p, p, p);
    for (long y0 = 0; y0 < p; ++y0) {
        const HeisElt moved = heis_mul(q, h, HeisElt{0, 0, y0});
        const long y1 = moved.y;
        const HeisElt a = heis_mul(q, heis_inv(q, HeisElt{0, 0, y1}), moved);
        REQUIRE(a.y == 0);
        m.at(y1, y0) = CycElt::zeta_pow(p, a.lam);
    }
    return m;
}

}  // namespace

TEST_CASE("quad form exponents") {
    const QuadForm q(7, 1);
    CHECK(q.q_exponent(3) == 2);       // 9 mod 7
    CHECK(q.b_exponent(1, 1) == 2);
    CHECK(q.b_exponent(3, 5) == 30 % 7);
    const QuadForm q2(7, 3);
    CHECK(q2.q_exponent(1) == 3);
    CHECK_THROWS_AS(QuadForm(9, 1), std::domain_error);
    CHECK_THROWS_AS(QuadForm(7, 7), std::domain_error);
}

TEST_CASE("heis_mul") {
    const QuadForm q(7, 1);
    const HeisElt h{3, 2, 5};
    CHECK(heis_mul(q, heis_identity(), h) == h);
    CHECK(heis_mul(q, h, heis_identity()) == h);

    // (0,1,0)(0,0,1) = (B(1,1), 1, 1) = (2, 1, 1)
    CHECK(heis_mul(q, HeisElt{0, 1, 0}, HeisElt{0, 0, 1}) == HeisElt{2, 1, 1});

    SUBCASE("closed-form inverse matches exhaustive search for p=5") {
        const QuadForm q5(5, 1);
        const auto elements = all_elements(5);
        for (const HeisElt& h5 : elements) {
            const HeisElt inv = heis_inv(q5, h5);
            CHECK(heis_mul(q5, h5, inv) == heis_identity());
            CHECK(heis_mul(q5, inv, h5) == heis_identity());
            // inverse is unique, so searching must find exactly this one
            int found = 0;
            for (const HeisElt& cand : elements) {
                if (heis_mul(q5, h5, cand) == heis_identity()) {
                    ++found;
                    REQUIRE(cand == inv);
                }
            }
            REQUIRE(found == 1);
        }
    }

    SUBCASE("associativity, exhaustive for p=3 and p=5") {
        for (long p : {3L, 5L}) {
            const QuadForm qp(p, 1);
            const auto elements = all_elements(p);
            for (const HeisElt& a : elements) {
                for (const HeisElt& b : elements) {
                    for (const HeisElt& c : elements) {
                        REQUIRE(heis_mul(qp, heis_mul(qp, a, b), c) == heis_mul(qp, a, heis_mul(qp, b, c)));
                    }
                }
            }
        }
    }

    SUBCASE("associativity, randomized for p=13") {
        const QuadForm q13(13, 2);
        std::mt19937 rng(5);
        std::uniform_int_distribution<long> d(0, 12);
        for (int i = 0; i < 200; ++i) {
            const HeisElt a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)}, c{d(rng), d(rng), d(rng)};
            REQUIRE(heis_mul(q13, heis_mul(q13, a, b), c) == heis_mul(q13, a, heis_mul(q13, b, c)));
        }
    }
}

TEST_CASE("sigma_matrix generators") {
    const QuadForm q(7, 1);

    SUBCASE("center acts by the natural character") {
        CHECK(sigma_matrix(q, HeisElt{1, 0, 0}) ==
              ExactMatrix::identity(7, 7) * CycElt::zeta_pow(7, 1));
        CHECK(sigma_matrix(q, HeisElt{3, 0, 0}) ==
              ExactMatrix::identity(7, 7) * CycElt::zeta_pow(7, 3));
    }

    SUBCASE("(0,0,1) acts by the cyclic shift") {
        const ExactMatrix m = sigma_matrix(q, HeisElt{0, 0, 1});
        for (long j = 0; j < 7; ++j) {
            for (long k = 0; k < 7; ++k) {
                const bool expect_one = (j == (k + 1) % 7);
                CHECK(m.at(j, k) == (expect_one ? CycElt::one(7) : CycElt::zero(7)));
            }
        }
    }

    SUBCASE("(0,1,0) acts by the B-phase diagonal") {
        const ExactMatrix m = sigma_matrix(q, HeisElt{0, 1, 0});
        const long expected[] = {0, 2, 4, 6, 1, 3, 5};  // 2j mod 7
        for (long j = 0; j < 7; ++j) {
            for (long k = 0; k < 7; ++k) {
                CHECK(m.at(j, k) == (j == k ? CycElt::zeta_pow(7, expected[j]) : CycElt::zero(7)));
            }
        }
    }
}

TEST_CASE("sigma_matrix matches the induced representation for p=5") {
    for (long c : {1L, 2L}) {
        const QuadForm q(5, c);
        for (const HeisElt& h : all_elements(5)) {
            REQUIRE(sigma_matrix(q, h) == induced_sigma(q, h));
        }
    }
}

TEST_CASE("sigma is a homomorphism") {
    SUBCASE("exhaustive for p=3 and p=5") {
        for (long p : {3L, 5L}) {
            const QuadForm q(p, 1);
            const auto elements = all_elements(p);
            std::vector<ExactMatrix> images;
            images.reserve(elements.size());
            for (const HeisElt& h : elements) images.push_back(sigma_matrix(q, h));
            auto index = [p](const HeisElt& h) { return (h.lam * p + h.x) * p + h.y; };
            for (const HeisElt& a : elements) {
                for (const HeisElt& b : elements) {
                    REQUIRE(images[index(heis_mul(q, a, b))] == images[index(a)] * images[index(b)]);
                }
            }
        }
    }
    SUBCASE("randomized for p=13") {
        const QuadForm q(13, 2);
        std::mt19937 rng(6);
        std::uniform_int_distribution<long> d(0, 12);
        for (int i = 0; i < 25; ++i) {
            const HeisElt a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
            REQUIRE(sigma_matrix(q, heis_mul(q, a, b)) == sigma_matrix(q, a) * sigma_matrix(q, b));
        }
    }
}

TEST_CASE("clifford automorphisms") {
    const QuadForm q(7, 1);
    CHECK(psi_s(q, heis_identity()) == heis_identity());
    CHECK(psi_s(q, HeisElt{0, 1, 0}) == HeisElt{0, 0, 1});
    CHECK(psi_t(q, HeisElt{0, 1, 0}) == HeisElt{0, 1, 0});

    SUBCASE("fix the center pointwise") {
        for (long lam = 0; lam < 7; ++lam) {
            CHECK(psi_s(q, HeisElt{lam, 0, 0}) == HeisElt{lam, 0, 0});
            CHECK(psi_t(q, HeisElt{lam, 0, 0}) == HeisElt{lam, 0, 0});
        }
    }

    SUBCASE("automorphism property, exhaustive for p=5") {
        const QuadForm q5(5, 2);
        const auto elements = all_elements(5);
        for (const HeisElt& a : elements) {
            for (const HeisElt& b : elements) {
                const HeisElt ab = heis_mul(q5, a, b);
                REQUIRE(psi_s(q5, ab) == heis_mul(q5, psi_s(q5, a), psi_s(q5, b)));
                REQUIRE(psi_t(q5, ab) == heis_mul(q5, psi_t(q5, a), psi_t(q5, b)));
            }
        }
    }

    SUBCASE("symmetric: psi(lam,-x,-y) negates the (x,y)-image, same lam shift") {
        const auto elements = all_elements(7);
        for (const HeisElt& h : elements) {
            const HeisElt pos = psi_s(q, h);
            const HeisElt neg = psi_s(q, HeisElt{h.lam, (7 - h.x) % 7, (7 - h.y) % 7});
            CHECK(neg.lam == pos.lam);
            CHECK(neg.x == (7 - pos.x) % 7);
            CHECK(neg.y == (7 - pos.y) % 7);
        }
    }

    SUBCASE("psi_t twice equals the automorphism attached to t^2, p=5") {
        const QuadForm q5(5, 1);
        for (const HeisElt& h : all_elements(5)) {
            const HeisElt twice = psi_t(q5, psi_t(q5, h));
            // t^2 shears by 2y and shifts lam by Q(y) applied twice = 2 c y^2
            const HeisElt direct{(h.lam + 2 * q5.q_exponent(h.y)) % 5, (h.x + 2 * h.y) % 5, h.y};
            REQUIRE(twice == direct);
        }
    }
}

TEST_CASE("intertwining: the Weil generators move sigma across psi") {
    for (long p : {5L, 7L}) {
        for (long c : {1L, smallest_nonresidue(p)}) {
            const QuadForm q(p, c);
            const WeilModel full = weil_full(q);
            const std::vector<HeisElt> generators = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
            for (const HeisElt& h : generators) {
                REQUIRE(full.S * sigma_matrix(q, h) == sigma_matrix(q, psi_s(q, h)) * full.S);
                REQUIRE(full.T * sigma_matrix(q, h) == sigma_matrix(q, psi_t(q, h)) * full.T);
            }
            // a couple of composite elements as well
            for (const HeisElt& h : {HeisElt{2, 3, 1}, HeisElt{1, 1, 1}}) {
                REQUIRE(full.S * sigma_matrix(q, h) == sigma_matrix(q, psi_s(q, h)) * full.S);
                REQUIRE(full.T * sigma_matrix(q, h) == sigma_matrix(q, psi_t(q, h)) * full.T);
            }
        }
    }
}
