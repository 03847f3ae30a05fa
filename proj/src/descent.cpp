#include "weilmin/descent.hpp"

#include <algorithm>
#include <sstream>

namespace weilmin {

ExactMatrix vandermonde(const QuadForm& q) {
    const long p = q.p;
    const long r = (p - 1) / 2;
    ExactMatrix V(p, r + 1, r + 1);
    for (long j = 0; j <= r; ++j) {
        const CycElt theta = CycElt::zeta_pow(p, q.q_exponent(j));
        CycElt power = CycElt::one(p);
        for (long k = 0; k <= r; ++k) {
            V.at(j, k) = power;
            if (k < r) power = power * theta;
        }
    }
    return V;
}

std::pair<ExactMatrix, ExactMatrix> conjugate_model(const WeilModel& m, const ExactMatrix& V) {
    if (m.series != Series::principal) {
        throw std::domain_error(std::string("conjugate_model: expected a principal model, got ") +
                                series_name(m.series));
    }
    if (V.rows() != m.S.rows() || V.cols() != m.S.rows()) {
        throw std::domain_error("conjugate_model: change-of-basis shape mismatch");
    }
    const ExactMatrix Vinv = V.inverse();
    return {Vinv * m.S * V, Vinv * m.T * V};
}

std::string ring_tag_token(RingTag tag) {
    switch (tag) {
        case RingTag::integers: return "integers";
        case RingTag::quadratic_integers: return "quadratic-integers";
        case RingTag::cyclotomic_integers: return "cyclotomic-integers";
        case RingTag::cyclotomic_p_inverted: return "cyclotomic-p-inverted";
        case RingTag::other: return "other";
    }
    return "?";
}

std::string ring_tag_string(RingTag tag, long p) {
    const long d = quadratic_epsilon(p) * p;
    switch (tag) {
        case RingTag::integers: return "Z";
        case RingTag::quadratic_integers: return "Z[(1+sqrt(" + std::to_string(d) + "))/2]";
        case RingTag::cyclotomic_integers: return "Z[zeta_" + std::to_string(p) + "]";
        case RingTag::cyclotomic_p_inverted:
            return "Z[1/" + std::to_string(p) + ", zeta_" + std::to_string(p) + "]";
        case RingTag::other: return "other";
    }
    return "?";
}

namespace {

bool is_rational_integer(const CycElt& x) { return x.is_rational() && is_integer(x.coeffs()[0]); }

bool power_basis_integral(const CycElt& x) {
    for (const Rational& c : x.coeffs()) {
        if (!is_integer(c)) return false;
    }
    return true;
}

bool denominators_are_p_powers(const CycElt& x) {
    const long p = x.prime();
    for (const Rational& c : x.coeffs()) {
        Integer den = c.get_den();
        while (den % p == 0) den /= p;
        if (den != 1) return false;
    }
    return true;
}

RingWitness make_witness(size_t i, size_t j, const CycElt& e, const std::string& reason) {
    return RingWitness{i, j, e.to_string(), reason};
}

}  // namespace

RingReport ring_of_definition(const ExactMatrix& M) {
    std::optional<RingWitness> not_z, not_quad, not_cyc, not_pinv;
    for (size_t i = 0; i < M.rows(); ++i) {
        for (size_t j = 0; j < M.cols(); ++j) {
            const CycElt& e = M.at(i, j);
            if (!not_z && !is_rational_integer(e)) {
                not_z = make_witness(i, j, e, "not a rational integer");
            }
            if (!not_quad) {
                auto conv = to_quadratic(e);
                if (!conv) {
                    not_quad = make_witness(i, j, e,
                                            conv.reason == QuadConversion::Reason::not_tau_fixed
                                                ? "not fixed by tau"
                                                : "not integral in the omega basis");
                }
            }
            if (!not_cyc && !power_basis_integral(e)) {
                not_cyc = make_witness(i, j, e, "non-integer power-basis coefficient");
            }
            if (!not_pinv && !denominators_are_p_powers(e)) {
                not_pinv = make_witness(i, j, e, "denominator has a prime factor other than p");
            }
        }
    }
    if (!not_z) return {RingTag::integers, std::nullopt};
    if (!not_quad) return {RingTag::quadratic_integers, not_z};
    if (!not_cyc) return {RingTag::cyclotomic_integers, not_quad};
    if (!not_pinv) return {RingTag::cyclotomic_p_inverted, not_cyc};
    return {RingTag::other, not_pinv};
}

GaloisCertificate galois_perm(const QuadForm& q) {
    const GaloisElt tau = tau_generator(q.p);
    const ExactMatrix V = vandermonde(q);
    const ExactMatrix P = galois_matrix(tau, V) * V.inverse();
    auto perm = detect_permutation(P);
    if (!perm) {
        throw ConsistencyError("galois_perm: tau(V_Q) V_Q^{-1} is not a permutation matrix for p=" +
                               std::to_string(q.p) + ", c=" + std::to_string(q.c));
    }
    if ((*perm)[0] != 0) {
        throw ConsistencyError("galois_perm: permutation does not fix index 0 for p=" + std::to_string(q.p));
    }
    return GaloisCertificate{*perm, permutation_order(*perm)};
}

namespace {

std::string first_mismatch(const ExactMatrix& A, const ExactMatrix& B) {
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) {
            if (A.at(i, j) != B.at(i, j)) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << "): " << A.at(i, j).to_string() << " vs "
                   << B.at(i, j).to_string();
                return os.str();
            }
        }
    }
    return "";
}

}  // namespace

std::vector<CheckResult> verify_theorem2(const WeilModel& even_model, const GaloisCertificate& cert) {
    if (even_model.series != Series::principal) {
        throw std::domain_error("verify_theorem2: expected a principal model");
    }
    const long p = even_model.q.p;
    const GaloisElt tau = tau_generator(p);
    const ExactMatrix P = ExactMatrix::permutation(p, cert.perm);
    const ExactMatrix Pinv = P.transpose();  // P^{-1} = P^t for permutations

    std::vector<CheckResult> report;
    {
        const ExactMatrix lhs = P * even_model.S * Pinv;
        const ExactMatrix rhs = galois_matrix(tau, even_model.S);
        const bool pass = lhs == rhs;
        report.push_back({"thm2-conjugation-S", pass, pass ? "" : first_mismatch(lhs, rhs)});
    }
    {
        const ExactMatrix lhs = P * even_model.T * Pinv;
        const ExactMatrix rhs = galois_matrix(tau, even_model.T);
        const bool pass = lhs == rhs;
        report.push_back({"thm2-conjugation-T", pass, pass ? "" : first_mismatch(lhs, rhs)});
    }
    return report;
}

std::vector<CheckResult> verify_charpoly_factorization(const QuadForm& q, const ExactMatrix& Tprime) {
    const long p = q.p;
    const long r = (p - 1) / 2;
    if (Tprime.rows() != static_cast<size_t>(r + 1) || Tprime.cols() != static_cast<size_t>(r + 1)) {
        throw std::domain_error("verify_charpoly_factorization: T' must be (r+1) x (r+1)");
    }
    std::vector<CheckResult> report;

    std::vector<CycElt> thetas;
    for (long j = 0; j <= r; ++j) thetas.push_back(CycElt::zeta_pow(p, q.q_exponent(j)));
    const CycPolynomial expected = CycPolynomial::from_roots(p, thetas);
    const CycPolynomial actual = char_poly(Tprime);
    {
        const bool pass = actual == expected;
        std::string witness;
        if (!pass) {
            for (size_t i = 0; i < std::min(actual.coeffs.size(), expected.coeffs.size()); ++i) {
                if (actual.coeffs[i] != expected.coeffs[i]) {
                    witness = "coefficient of x^" + std::to_string(i) + ": " + actual.coeffs[i].to_string() +
                              " vs " + expected.coeffs[i].to_string();
                    break;
                }
            }
            if (witness.empty()) witness = "degree mismatch";
        }
        report.push_back({"charpoly-product", pass, witness});
    }
    {
        // m(x) = x^{r+1} + a_1 x^r + ... + a_{r+1}; the last column of the
        // companion T' is (-a_{r+1}, ..., -a_1) top to bottom.
        bool pass = true;
        std::string witness;
        for (long i = 0; i <= r && pass; ++i) {
            if (Tprime.at(i, r) != -actual.coeffs[i]) {
                pass = false;
                witness = "row " + std::to_string(i) + ": " + Tprime.at(i, r).to_string() + " vs " +
                          (-actual.coeffs[i]).to_string();
            }
        }
        for (long i = 0; i <= r && pass; ++i) {
            for (long j = 0; j < r && pass; ++j) {
                const bool want_one = (i == j + 1);
                const CycElt& e = Tprime.at(i, j);
                if (e != (want_one ? CycElt::one(p) : CycElt::zero(p))) {
                    pass = false;
                    witness = "companion shape broken at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        }
        report.push_back({"charpoly-companion-column", pass, witness});
    }
    {
        bool pass = true;
        std::string witness;
        for (size_t i = 0; i < actual.coeffs.size() && pass; ++i) {
            if (!to_quadratic(actual.coeffs[i])) {
                pass = false;
                witness = "coefficient of x^" + std::to_string(i) + " = " + actual.coeffs[i].to_string() +
                          " is not a quadratic integer";
            }
        }
        report.push_back({"charpoly-coeffs-quadratic", pass, witness});
    }
    return report;
}

MinimalModel minimal_model(const QuadForm& q) {
    const WeilModel even = restrict_even(weil_full(q));
    const ExactMatrix V = vandermonde(q);
    auto [Sp, Tp] = conjugate_model(even, V);

    MinimalModel model{q, {}, {}, RingTag::quadratic_integers};
    auto convert = [&](const ExactMatrix& M, const char* name) {
        std::vector<std::vector<QuadCoord>> out(M.rows());
        for (size_t i = 0; i < M.rows(); ++i) {
            for (size_t j = 0; j < M.cols(); ++j) {
                auto conv = to_quadratic(M.at(i, j));
                if (!conv) {
                    throw ConsistencyError(std::string("minimal_model: ") + name + " entry (" +
                                           std::to_string(i) + "," + std::to_string(j) + ") = " +
                                           M.at(i, j).to_string() + " is not a quadratic integer");
                }
                out[i].push_back(*conv.value);
            }
        }
        return out;
    };
    model.Sprime = convert(Sp, "S'");
    model.Tprime = convert(Tp, "T'");
    model.ring = std::max(ring_of_definition(Sp).tag, ring_of_definition(Tp).tag);
    return model;
}

ExactMatrix quad_matrix_to_cyc(const std::vector<std::vector<QuadCoord>>& M, long p) {
    if (M.empty() || M.front().empty()) {
        throw std::domain_error("quad_matrix_to_cyc: empty matrix");
    }
    ExactMatrix out(p, M.size(), M.front().size());
    for (size_t i = 0; i < M.size(); ++i) {
        if (M[i].size() != M.front().size()) {
            throw std::domain_error("quad_matrix_to_cyc: ragged rows");
        }
        for (size_t j = 0; j < M[i].size(); ++j) {
            out.at(i, j) = quad_to_cyc(M[i][j]);
        }
    }
    return out;
}

CuspidalDescent explore_cuspidal_descent(const QuadForm& q) {
    const WeilModel odd = restrict_odd(weil_full(q));
    const long p = q.p;
    const long r = (p - 1) / 2;
    ExactMatrix V(p, r, r);
    for (long j = 0; j < r; ++j) {
        const CycElt theta = CycElt::zeta_pow(p, q.q_exponent(j + 1));
        CycElt power = CycElt::one(p);
        for (long k = 0; k < r; ++k) {
            V.at(j, k) = power;
            if (k < r - 1) power = power * theta;
        }
    }
    const ExactMatrix Vinv = V.inverse();
    ExactMatrix Sc = Vinv * odd.S * V;
    ExactMatrix Tc = Vinv * odd.T * V;
    RingReport ring = ring_of_definition(Sc);
    const RingReport ring_t = ring_of_definition(Tc);
    if (static_cast<int>(ring_t.tag) > static_cast<int>(ring.tag)) ring = ring_t;
    return CuspidalDescent{std::move(Sc), std::move(Tc), std::move(ring)};
}

}  // namespace weilmin
