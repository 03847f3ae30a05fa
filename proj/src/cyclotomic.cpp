#include "weilmin/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace weilmin {

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

namespace {

long mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long mulmod(long a, long b, long p) { return mod(a, p) * mod(b, p) % p; }

long powmod(long base, long exp, long p) {
    long result = 1;
    base = mod(base, p);
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
    }
    return result;
}

void require_odd_prime(long p, const char* where) {
    if (!is_odd_prime(p)) {
        throw std::domain_error(std::string(where) + ": p = " + std::to_string(p) + " is not an odd prime");
    }
}

}  // namespace

int legendre_symbol(long a, long p) {
    require_odd_prime(p, "legendre_symbol");
    long r = powmod(a, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

long smallest_primitive_root(long p) {
    require_odd_prime(p, "smallest_primitive_root");
    // factor p-1, then test generators by the standard criterion
    std::vector<long> prime_factors;
    long n = p - 1;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            prime_factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) prime_factors.push_back(n);
    for (long g = 2; g < p; ++g) {
        bool primitive = true;
        for (long q : prime_factors) {
            if (powmod(g, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found");
}

long smallest_nonresidue(long p) {
    require_odd_prime(p, "smallest_nonresidue");
    for (long c = 2; c < p; ++c) {
        if (legendre_symbol(c, p) == -1) return c;
    }
    throw std::logic_error("smallest_nonresidue: none found");
}

CycElt::CycElt(long p, std::vector<Rational> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    require_odd_prime(p_, "CycElt");
    if (coeffs_.size() != static_cast<size_t>(p_ - 1)) {
        throw std::domain_error("CycElt: expected " + std::to_string(p_ - 1) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
    }
}

CycElt CycElt::zero(long p) { return CycElt(p, std::vector<Rational>(p - 1, Rational(0))); }

CycElt CycElt::one(long p) { return from_rational(p, Rational(1)); }

CycElt CycElt::from_rational(long p, const Rational& q) {
    std::vector<Rational> c(p - 1, Rational(0));
    c[0] = q;
    return CycElt(p, std::move(c));
}

CycElt CycElt::zeta_pow(long p, long e, const Rational& coeff) {
    require_odd_prime(p, "CycElt::zeta_pow");
    std::vector<Rational> c(p - 1, Rational(0));
    e = mod(e, p);
    if (e == p - 1) {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (auto& ci : c) ci = -coeff;
    } else {
        c[e] = coeff;
    }
    return CycElt(p, std::move(c));
}

bool CycElt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycElt::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

void CycElt::check_same_prime(const CycElt& rhs, const char* op) const {
    if (p_ != rhs.p_) {
        throw std::domain_error(std::string(op) + ": mismatched primes " + std::to_string(p_) + " and " +
                                std::to_string(rhs.p_));
    }
}

CycElt CycElt::operator+(const CycElt& rhs) const {
    CycElt out = *this;
    out += rhs;
    return out;
}

CycElt& CycElt::operator+=(const CycElt& rhs) {
    check_same_prime(rhs, "cyc_add");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycElt CycElt::operator-(const CycElt& rhs) const {
    CycElt out = *this;
    out -= rhs;
    return out;
}

CycElt& CycElt::operator-=(const CycElt& rhs) {
    check_same_prime(rhs, "cyc_sub");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycElt CycElt::operator-() const {
    CycElt out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycElt CycElt::operator*(const Rational& scalar) const {
    CycElt out = *this;
    for (auto& c : out.coeffs_) c *= scalar;
    return out;
}

CycElt CycElt::operator*(const CycElt& rhs) const {
    check_same_prime(rhs, "cyc_mul");
    const size_t n = coeffs_.size();
    // sparse convolution: exponents run up to 2(p-2) < 2p
    std::vector<Rational> acc(2 * n, Rational(0));
    std::vector<size_t> lhs_nz, rhs_nz;
    for (size_t i = 0; i < n; ++i) {
        if (coeffs_[i] != 0) lhs_nz.push_back(i);
    }
    for (size_t j = 0; j < n; ++j) {
        if (rhs.coeffs_[j] != 0) rhs_nz.push_back(j);
    }
    for (size_t i : lhs_nz) {
        for (size_t j : rhs_nz) {
            acc[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    // fold exponents >= p-1: zeta^p = 1, then zeta^{p-1} via the cyclotomic relation
    std::vector<Rational> out(n, Rational(0));
    Rational top(0);  // accumulated coefficient of zeta^{p-1}
    const size_t p = static_cast<size_t>(p_);
    for (size_t e = 0; e < acc.size(); ++e) {
        if (acc[e] == 0) continue;
        size_t r = e % p;
        if (r == p - 1) {
            top += acc[e];
        } else {
            out[r] += acc[e];
        }
    }
    if (top != 0) {
        for (auto& c : out) c -= top;
    }
    return CycElt(p_, std::move(out));
}

namespace {

// dense polynomial helpers over Rational, lowest degree first
using Poly = std::vector<Rational>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a -= q * b
void poly_sub_mul(Poly& a, const Poly& q, const Poly& b) {
    if (q.empty() || b.empty()) return;
    if (a.size() < q.size() + b.size() - 1) a.resize(q.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            a[i + j] -= q[i] * b[j];
        }
    }
    poly_trim(a);
}

Poly poly_div(Poly a, const Poly& b) {
    poly_trim(a);
    Poly q;
    if (a.size() < b.size()) return q;
    q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        size_t k = a.size() - b.size();
        Rational f = a.back() / b.back();
        q[k] = f;
        for (size_t j = 0; j < b.size(); ++j) a[j + k] -= f * b[j];
        poly_trim(a);
        if (a.empty()) break;
    }
    return q;
}

}  // namespace

CycElt CycElt::inverse() const {
    if (is_zero()) {
        throw std::domain_error("cyc_inv: division by zero in Q(zeta_" + std::to_string(p_) + ")");
    }
    // extended Euclid for gcd(a, Phi_p) = 1 with Phi_p = 1 + x + ... + x^{p-1}
    Poly r0(coeffs_.begin(), coeffs_.end());
    poly_trim(r0);
    Poly r1(static_cast<size_t>(p_), Rational(1));
    Poly s0{Rational(1)}, s1{};
    while (!r1.empty()) {
        Poly q = poly_div(r0, r1);
        Poly r2 = r0;
        poly_sub_mul(r2, q, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Poly s2 = s0;
        poly_sub_mul(s2, q, s1);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) {
        throw std::logic_error("cyc_inv: gcd with Phi_p is not constant");
    }
    std::vector<Rational> inv(p_ - 1, Rational(0));
    Rational top(0);
    for (size_t e = 0; e < s0.size(); ++e) {
        Rational c = s0[e] / r0[0];
        size_t r = e % static_cast<size_t>(p_);
        if (r == static_cast<size_t>(p_ - 1)) {
            top += c;
        } else {
            inv[r] += c;
        }
    }
    if (top != 0) {
        for (auto& c : inv) c -= top;
    }
    return CycElt(p_, std::move(inv));
}

bool CycElt::operator==(const CycElt& rhs) const { return p_ == rhs.p_ && coeffs_ == rhs.coeffs_; }

std::string CycElt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (long e = p_ - 2; e >= 0; --e) {
        const Rational& c = coeffs_[e];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool unit = abs_c == 1;
        if (e == 0) {
            os << (is_integer(abs_c) ? abs_c.get_num().get_str() : format_rational(abs_c));
        } else {
            if (!unit) os << (is_integer(abs_c) ? abs_c.get_num().get_str() : format_rational(abs_c)) << "*";
            os << "z";
            if (e > 1) os << "^" << e;
        }
    }
    if (first) os << "0";
    return os.str();
}

GaloisElt::GaloisElt(long p_in, long j_in) : p(p_in), j(j_in) {
    require_odd_prime(p, "GaloisElt");
    j = mod(j, p);
    if (j == 0) {
        throw std::domain_error("GaloisElt: exponent j must be a unit mod p");
    }
}

CycElt galois_apply(const GaloisElt& sigma, const CycElt& x) {
    if (sigma.p != x.prime()) {
        throw std::domain_error("galois_apply: mismatched primes " + std::to_string(sigma.p) + " and " +
                                std::to_string(x.prime()));
    }
    const long p = sigma.p;
    std::vector<Rational> out(p - 1, Rational(0));
    Rational top(0);
    for (long e = 0; e < p - 1; ++e) {
        const Rational& c = x.coeffs()[e];
        if (c == 0) continue;
        long r = mulmod(sigma.j, e, p);
        if (r == p - 1) {
            top += c;
        } else {
            out[r] += c;
        }
    }
    if (top != 0) {
        for (auto& c : out) c -= top;
    }
    return CycElt(p, std::move(out));
}

GaloisElt galois_generator(long p) { return GaloisElt(p, smallest_primitive_root(p)); }

GaloisElt tau_generator(long p) {
    long g = smallest_primitive_root(p);
    return GaloisElt(p, mulmod(g, g, p));
}

CycElt gauss_sum(long p, long c) {
    require_odd_prime(p, "gauss_sum");
    if (mod(c, p) == 0) {
        throw std::domain_error("gauss_sum: c = " + std::to_string(c) + " is not a unit mod " + std::to_string(p));
    }
    CycElt acc = CycElt::zero(p);
    for (long x = 0; x < p; ++x) {
        acc += CycElt::zeta_pow(p, mulmod(mulmod(c, x, p), x, p));
    }
    return acc;
}

std::string QuadCoord::to_string() const {
    std::ostringstream os;
    os << a.get_str();
    if (b != 0) {
        os << (b < 0 ? " - " : " + ");
        Integer abs_b = abs(b);
        if (abs_b != 1) os << abs_b.get_str() << "*";
        os << "w";
    }
    return os.str();
}

CycElt quad_to_cyc(const QuadCoord& q) {
    // omega = (1 + sqrt(eps p))/2 with sqrt(eps p) := gauss_sum(p, 1)
    CycElt omega = (CycElt::one(q.p) + gauss_sum(q.p, 1)) * Rational(1, 2);
    return CycElt::from_rational(q.p, Rational(q.a)) + omega * Rational(q.b);
}

std::optional<std::pair<Rational, Rational>> quadratic_coordinates(const CycElt& x) {
    const long p = x.prime();
    const GaloisElt tau = tau_generator(p);
    if (galois_apply(tau, x) != x) return std::nullopt;
    // tau-fixed means x = a' + b' g with g = gauss_sum(p,1); solve from two
    // power-basis coordinates and confirm by reconstruction.
    const CycElt g = gauss_sum(p, 1);
    size_t k0 = 1;
    while (g.coeffs()[k0] == 0) ++k0;
    Rational b_prime = x.coeffs()[k0] / g.coeffs()[k0];
    Rational a_prime = x.coeffs()[0] - b_prime * g.coeffs()[0];
    CycElt recon = CycElt::from_rational(p, a_prime) + g * b_prime;
    if (recon != x) {
        throw std::logic_error("quadratic_coordinates: tau-fixed element not spanned by {1, sqrt(eps p)}");
    }
    // a' + b' g = a + b omega with omega = (1+g)/2: a = a' - b', b = 2 b'
    return std::make_pair(a_prime - b_prime, 2 * b_prime);
}

QuadConversion to_quadratic(const CycElt& x) {
    auto coords = quadratic_coordinates(x);
    if (!coords) {
        return {std::nullopt, QuadConversion::Reason::not_tau_fixed};
    }
    const auto& [a, b] = *coords;
    if (!is_integer(a) || !is_integer(b)) {
        return {std::nullopt, QuadConversion::Reason::not_integral};
    }
    return {QuadCoord{x.prime(), a.get_num(), b.get_num()}, QuadConversion::Reason::ok};
}

}  // namespace weilmin
