#pragma once

#include "weilmin/matrix.hpp"

namespace weilmin {

// Quadratic form Q(x) = c x^2 / p on Z/pZ as an exponent of zeta_p, with
// bilinear form B(x, y) = 2 c x y / p. c = 1 selects the first form; a
// quadratic non-residue c selects the second.
struct QuadForm {
    long p;
    long c;

    QuadForm(long p_in, long c_in);

    long q_exponent(long x) const;        // c x^2 mod p
    long b_exponent(long x, long y) const;  // 2 c x y mod p
};

// Element (lambda, x, y) of the Heisenberg group H_Q. The central coordinate
// is stored as an exponent of zeta_p, so all phases are integers mod p.
struct HeisElt {
    long lam;
    long x;
    long y;

    bool operator==(const HeisElt& rhs) const = default;
};

HeisElt heis_identity();
HeisElt heis_reduce(const QuadForm& q, const HeisElt& h);
HeisElt heis_mul(const QuadForm& q, const HeisElt& h1, const HeisElt& h2);
HeisElt heis_inv(const QuadForm& q, const HeisElt& h);

// The induced representation sigma on functions Z/pZ -> C in the delta
// basis: sigma(lam,x,y)[k+y][k] = zeta^{lam + 2 c x k}. The center acts by
// its natural character and (0,0,1) by the cyclic shift delta_k -> delta_{k+1}.
ExactMatrix sigma_matrix(const QuadForm& q, const HeisElt& h);

// Clifford automorphisms realizing the SL2 generators:
//   psi_s(lam, x, y) = (lam - 2 c x y, -y,  x)
//   psi_t(lam, x, y) = (lam + c y^2,  x+y,  y)
HeisElt psi_s(const QuadForm& q, const HeisElt& h);
HeisElt psi_t(const QuadForm& q, const HeisElt& h);

}  // namespace weilmin
