#pragma once

#include <optional>
#include <vector>

#include "weilmin/cyclotomic.hpp"

namespace weilmin {

struct SingularMatrixError : std::domain_error {
    explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

// Dense matrix over Q(zeta_p), row-major. Matrices stay small (at most p x p
// for p <= 23 at desk scale), so everything is the naive exact algorithm.
class ExactMatrix {
  public:
    ExactMatrix(long p, size_t rows, size_t cols);  // zero-filled

    static ExactMatrix identity(long p, size_t n);
    static ExactMatrix permutation(long p, const std::vector<size_t>& perm);  // rows of I permuted: M[i][perm[i]] = 1

    long prime() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    CycElt& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const CycElt& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator*(const CycElt& scalar) const;
    bool operator==(const ExactMatrix& rhs) const;
    bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }

    ExactMatrix pow(unsigned long k) const;
    ExactMatrix transpose() const;
    CycElt trace() const;

    // Exact Gaussian elimination; pivot is the first nonzero entry of the
    // column (no magnitude ordering exists in an exact field).
    ExactMatrix inverse() const;

    bool is_identity() const;

  private:
    long p_;
    size_t rows_, cols_;
    std::vector<CycElt> entries_;
};

// Polynomial over Q(zeta_p), lowest degree first; leading coefficient is
// nonzero unless the polynomial is zero.
struct CycPolynomial {
    long p;
    std::vector<CycElt> coeffs;

    size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    void trim();
    bool operator==(const CycPolynomial& rhs) const { return p == rhs.p && coeffs == rhs.coeffs; }

    // prod (x - roots[i]); the empty product is the constant 1
    static CycPolynomial from_roots(long p, const std::vector<CycElt>& roots);
};

// Monic characteristic polynomial via the Faddeev-LeVerrier recurrence.
CycPolynomial char_poly(const ExactMatrix& A);

// Row permutation such that M[i][perm[i]] = 1, if M is a 0/1 matrix with
// exactly one 1 per row and column; nullopt otherwise.
std::optional<std::vector<size_t>> detect_permutation(const ExactMatrix& M);

unsigned long permutation_order(const std::vector<size_t>& perm);

// Entrywise Galois action; a ring homomorphism on matrices.
ExactMatrix galois_matrix(const GaloisElt& sigma, const ExactMatrix& M);

}  // namespace weilmin
