#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weilmin/rational.hpp"

namespace weilmin {

bool is_odd_prime(long p);

// Legendre symbol (a|p) in {-1, 0, +1}.
int legendre_symbol(long a, long p);

long smallest_primitive_root(long p);
long smallest_nonresidue(long p);

// Element of Q(zeta_p) in the power basis 1, zeta, ..., zeta^{p-2}.
// The relation zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}) is applied
// eagerly, so every value has a unique coefficient vector of length p-1.
class CycElt {
  public:
    CycElt(long p, std::vector<Rational> coeffs);

    static CycElt zero(long p);
    static CycElt one(long p);
    static CycElt from_rational(long p, const Rational& q);
    // coeff * zeta^e, e taken mod p
    static CycElt zeta_pow(long p, long e, const Rational& coeff = Rational(1));

    long prime() const { return p_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;  // all coefficients beyond the constant vanish

    CycElt operator+(const CycElt& rhs) const;
    CycElt operator-(const CycElt& rhs) const;
    CycElt operator-() const;
    CycElt operator*(const CycElt& rhs) const;
    CycElt operator*(const Rational& scalar) const;
    CycElt& operator+=(const CycElt& rhs);
    CycElt& operator-=(const CycElt& rhs);

    // Multiplicative inverse via extended Euclid in Q[x] mod Phi_p(x).
    CycElt inverse() const;

    bool operator==(const CycElt& rhs) const;
    bool operator!=(const CycElt& rhs) const { return !(*this == rhs); }

    std::string to_string() const;  // human-readable polynomial in z = zeta_p

  private:
    long p_;
    std::vector<Rational> coeffs_;  // length p-1

    void check_same_prime(const CycElt& rhs, const char* op) const;
};

inline CycElt operator*(const Rational& scalar, const CycElt& x) { return x * scalar; }

// Automorphism zeta_p -> zeta_p^j of Q(zeta_p), gcd(j, p) = 1.
struct GaloisElt {
    long p;
    long j;

    GaloisElt(long p_in, long j_in);
};

CycElt galois_apply(const GaloisElt& sigma, const CycElt& x);

// Generator of Gal(Q(zeta_p)/Q): zeta -> zeta^gamma with gamma the smallest
// primitive root mod p. tau_generator is its square, the generator of the
// index-2 subgroup fixing Q(sqrt(eps p)).
GaloisElt galois_generator(long p);
GaloisElt tau_generator(long p);

// Quadratic Gauss sum  sum_{x mod p} zeta_p^{c x^2}.  Squares to eps*p and
// equals (c|p) * gauss_sum(p, 1); gauss_sum(p, 1) is the library's
// definition of sqrt(eps p).
CycElt gauss_sum(long p, long c);

inline int quadratic_epsilon(long p) { return p % 4 == 1 ? 1 : -1; }

// Algebraic integer a + b*omega of Q(sqrt(eps p)), omega = (1+sqrt(eps p))/2.
struct QuadCoord {
    long p;
    Integer a;
    Integer b;

    bool operator==(const QuadCoord& rhs) const { return p == rhs.p && a == rhs.a && b == rhs.b; }
    std::string to_string() const;
};

CycElt quad_to_cyc(const QuadCoord& q);

// Membership outcome for the ring of integers Z[(1+sqrt(eps p))/2].
// Non-membership is a value, not an error.
struct QuadConversion {
    enum class Reason { ok, not_tau_fixed, not_integral };

    std::optional<QuadCoord> value;
    Reason reason = Reason::ok;

    explicit operator bool() const { return value.has_value(); }
};

QuadConversion to_quadratic(const CycElt& x);

// Rational coordinates of x in the {1, omega} basis, provided x lies in the
// subfield Q(sqrt(eps p)) at all (nullopt otherwise). Used by both
// to_quadratic and the ring-of-definition classifier.
std::optional<std::pair<Rational, Rational>> quadratic_coordinates(const CycElt& x);

}  // namespace weilmin
