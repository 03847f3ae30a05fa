#pragma once

#include <string>
#include <vector>

#include "weilmin/weil.hpp"

namespace weilmin {

// Thrown when an exact computation contradicts a structural claim the rest
// of the pipeline depends on (e.g. tau(V_Q) V_Q^{-1} failing to be a
// permutation matrix).
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// (r+1) x (r+1) Vandermonde matrix of the even T-eigenvalues: row j is
// (1, theta_j, ..., theta_j^r) with theta_j = zeta^{c j^2}.
ExactMatrix vandermonde(const QuadForm& q);

// (S', T') = (V^{-1} S V, V^{-1} T V) for a principal-series model.
std::pair<ExactMatrix, ExactMatrix> conjugate_model(const WeilModel& m, const ExactMatrix& V);

// Ascending chain Z < Z[(1+sqrt(eps p))/2] < Z[zeta_p] < Z[1/p, zeta_p];
// "other" when some entry has a denominator prime other than p.
enum class RingTag { integers, quadratic_integers, cyclotomic_integers, cyclotomic_p_inverted, other };

std::string ring_tag_token(RingTag tag);
std::string ring_tag_string(RingTag tag, long p);  // e.g. "Z[(1+sqrt(-7))/2]"

struct RingWitness {
    size_t row = 0;
    size_t col = 0;
    std::string value;
    std::string reason;  // why the entry fails the next-smaller ring
};

struct RingReport {
    RingTag tag = RingTag::other;
    std::optional<RingWitness> witness;  // blocking entry for the next-smaller ring
};

RingReport ring_of_definition(const ExactMatrix& M);

// Permutation certificate for tau(V_Q) = P V_Q; perm fixes index 0.
struct GaloisCertificate {
    std::vector<size_t> perm;
    unsigned long order = 0;
};

GaloisCertificate galois_perm(const QuadForm& q);  // throws ConsistencyError on falsification

// One row of a verification report; witness is empty on pass.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

// P S P^{-1} = tau(S) and P T P^{-1} = tau(T) on the even model.
std::vector<CheckResult> verify_theorem2(const WeilModel& even_model, const GaloisCertificate& cert);

// char_poly(T') = prod_j (x - theta_j), its coefficients are quadratic
// integers, and they match the negated companion column of T'.
std::vector<CheckResult> verify_charpoly_factorization(const QuadForm& q, const ExactMatrix& Tprime);

// Minimal integral model: the conjugated principal model with entries in the
// ring of integers of Q(sqrt(eps p)).
struct MinimalModel {
    QuadForm q;
    std::vector<std::vector<QuadCoord>> Sprime;
    std::vector<std::vector<QuadCoord>> Tprime;
    RingTag ring = RingTag::other;
};

// Builds (and converts) the minimal model from scratch. Throws
// ConsistencyError if some entry fails to be a quadratic integer, which
// the descent guarantees cannot happen.
MinimalModel minimal_model(const QuadForm& q);

ExactMatrix quad_matrix_to_cyc(const std::vector<std::vector<QuadCoord>>& M, long p);

// Exploratory: Vandermonde conjugation of the cuspidal model using the odd
// T-eigenvalues. Reports the observed ring only; no minimality claim exists
// for the cuspidal series.
struct CuspidalDescent {
    ExactMatrix Sconj;
    ExactMatrix Tconj;
    RingReport ring;
};

CuspidalDescent explore_cuspidal_descent(const QuadForm& q);

}  // namespace weilmin
