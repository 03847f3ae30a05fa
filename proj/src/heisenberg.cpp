#include "weilmin/heisenberg.hpp"

namespace weilmin {

namespace {

long mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

}  // namespace

QuadForm::QuadForm(long p_in, long c_in) : p(p_in), c(c_in) {
    if (!is_odd_prime(p)) {
        throw std::domain_error("QuadForm: p = " + std::to_string(p) + " is not an odd prime");
    }
    c = mod(c, p);
    if (c == 0) {
        throw std::domain_error("QuadForm: c must be a unit mod p");
    }
}

long QuadForm::q_exponent(long x) const { return mod(c * mod(x, p) % p * mod(x, p), p); }

long QuadForm::b_exponent(long x, long y) const { return mod(2 * c % p * mod(x, p) % p * mod(y, p), p); }

HeisElt heis_identity() { return HeisElt{0, 0, 0}; }

HeisElt heis_reduce(const QuadForm& q, const HeisElt& h) {
    return HeisElt{mod(h.lam, q.p), mod(h.x, q.p), mod(h.y, q.p)};
}

HeisElt heis_mul(const QuadForm& q, const HeisElt& h1, const HeisElt& h2) {
    return heis_reduce(q, HeisElt{h1.lam + h2.lam + q.b_exponent(h1.x, h2.y), h1.x + h2.x, h1.y + h2.y});
}

HeisElt heis_inv(const QuadForm& q, const HeisElt& h) {
    return heis_reduce(q, HeisElt{-h.lam + q.b_exponent(h.x, h.y), -h.x, -h.y});
}

ExactMatrix sigma_matrix(const QuadForm& q, const HeisElt& h_in) {
    const long p = q.p;
    const HeisElt h = heis_reduce(q, h_in);
    // factor h = (lam - B(x,y), 0, 0) * (0, x, 0) * (0, 0, y); the cocycle
    // bookkeeping is forced by heis_mul (the lam-correction is produced by
    // heis_mul((0,x,0),(0,0,y)))
    const long correction = heis_mul(q, HeisElt{0, h.x, 0}, HeisElt{0, 0, h.y}).lam;
    const long lam0 = mod(h.lam - correction, p);
    ExactMatrix m(p, p, p);
    for (long k = 0; k < p; ++k) {
        const long row = mod(k + h.y, p);
        // central scalar times diag(zeta^{B(x,j)}) times the shift by y
        m.at(row, k) = CycElt::zeta_pow(p, lam0 + q.b_exponent(h.x, row));
    }
    return m;
}

HeisElt psi_s(const QuadForm& q, const HeisElt& h) {
    return heis_reduce(q, HeisElt{h.lam + q.b_exponent(-h.x, h.y), -h.y, h.x});
}

HeisElt psi_t(const QuadForm& q, const HeisElt& h) {
    return heis_reduce(q, HeisElt{h.lam + q.q_exponent(h.y), h.x + h.y, h.y});
}

}  // namespace weilmin
