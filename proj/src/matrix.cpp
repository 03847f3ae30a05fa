#include "weilmin/matrix.hpp"

#include <numeric>

namespace weilmin {

ExactMatrix::ExactMatrix(long p, size_t rows, size_t cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, CycElt::zero(p)) {
    if (rows == 0 || cols == 0) {
        throw std::domain_error("ExactMatrix: dimensions must be positive");
    }
}

ExactMatrix ExactMatrix::identity(long p, size_t n) {
    ExactMatrix m(p, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = CycElt::one(p);
    return m;
}

ExactMatrix ExactMatrix::permutation(long p, const std::vector<size_t>& perm) {
    ExactMatrix m(p, perm.size(), perm.size());
    for (size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size()) {
            throw std::domain_error("ExactMatrix::permutation: index out of range");
        }
        m.at(i, perm[i]) = CycElt::one(p);
    }
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (p_ != rhs.p_) {
        throw std::domain_error("mat_mul: mismatched primes");
    }
    if (cols_ != rhs.rows_) {
        throw std::domain_error("mat_mul: shape mismatch " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " * " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    }
    ExactMatrix out(p_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const CycElt& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                const CycElt& b = rhs.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator*(const CycElt& scalar) const {
    ExactMatrix out = *this;
    for (auto& e : out.entries_) e = e * scalar;
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    return p_ == rhs.p_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

ExactMatrix ExactMatrix::pow(unsigned long k) const {
    if (rows_ != cols_) {
        throw std::domain_error("mat_pow: matrix not square");
    }
    ExactMatrix result = identity(p_, rows_);
    ExactMatrix base = *this;
    for (; k > 0; k >>= 1) {
        if (k & 1) result = result * base;
        if (k > 1) base = base * base;
    }
    return result;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(p_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
}

CycElt ExactMatrix::trace() const {
    if (rows_ != cols_) {
        throw std::domain_error("trace: matrix not square");
    }
    CycElt t = CycElt::zero(p_);
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) {
        throw std::domain_error("mat_inv: matrix not square");
    }
    const size_t n = rows_;
    ExactMatrix work = *this;
    ExactMatrix inv = identity(p_, n);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) {
            throw SingularMatrixError("mat_inv: zero pivot column " + std::to_string(col));
        }
        if (pivot != col) {
            for (size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const CycElt scale = work.at(col, col).inverse();
        for (size_t j = 0; j < n; ++j) {
            work.at(col, j) = work.at(col, j) * scale;
            inv.at(col, j) = inv.at(col, j) * scale;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || work.at(row, col).is_zero()) continue;
            const CycElt factor = work.at(row, col);
            for (size_t j = 0; j < n; ++j) {
                work.at(row, j) -= factor * work.at(col, j);
                inv.at(row, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool ExactMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(p_, rows_);
}

void CycPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

CycPolynomial CycPolynomial::from_roots(long p, const std::vector<CycElt>& roots) {
    CycPolynomial poly{p, {CycElt::one(p)}};
    for (const CycElt& root : roots) {
        std::vector<CycElt> next(poly.coeffs.size() + 1, CycElt::zero(p));
        for (size_t i = 0; i < poly.coeffs.size(); ++i) {
            next[i + 1] += poly.coeffs[i];
            next[i] -= poly.coeffs[i] * root;
        }
        poly.coeffs = std::move(next);
    }
    return poly;
}

namespace {

CycElt trace_of_product(const ExactMatrix& A, const ExactMatrix& B) {
    CycElt t = CycElt::zero(A.prime());
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) {
            if (A.at(i, j).is_zero() || B.at(j, i).is_zero()) continue;
            t += A.at(i, j) * B.at(j, i);
        }
    }
    return t;
}

}  // namespace

CycPolynomial char_poly(const ExactMatrix& A) {
    if (A.rows() != A.cols()) {
        throw std::domain_error("char_poly: matrix not square");
    }
    const long p = A.prime();
    const size_t n = A.rows();
    // Faddeev-LeVerrier: M_1 = I, c_{n-1} = -tr(A M_1),
    // M_{k+1} = A M_k + c_{n-k} I, c_{n-k-1} = -tr(A M_{k+1})/(k+1).
    std::vector<CycElt> c(n + 1, CycElt::zero(p));
    c[n] = CycElt::one(p);
    ExactMatrix M = ExactMatrix::identity(p, n);
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            ExactMatrix AM = A * M;
            for (size_t i = 0; i < n; ++i) AM.at(i, i) += c[n - k + 1];
            M = std::move(AM);
        }
        // division by k is exact in characteristic 0
        c[n - k] = -(trace_of_product(A, M) * Rational(1, static_cast<long>(k)));
    }
    CycPolynomial poly{p, std::move(c)};
    return poly;
}

std::optional<std::vector<size_t>> detect_permutation(const ExactMatrix& M) {
    if (M.rows() != M.cols()) return std::nullopt;
    const size_t n = M.rows();
    const CycElt one = CycElt::one(M.prime());
    std::vector<size_t> perm(n, n);
    std::vector<bool> col_used(n, false);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const CycElt& e = M.at(i, j);
            if (e.is_zero()) continue;
            if (e != one || perm[i] != n) return std::nullopt;
            perm[i] = j;
        }
        if (perm[i] == n || col_used[perm[i]]) return std::nullopt;
        col_used[perm[i]] = true;
    }
    return perm;
}

unsigned long permutation_order(const std::vector<size_t>& perm) {
    unsigned long order = 1;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        unsigned long len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

ExactMatrix galois_matrix(const GaloisElt& sigma, const ExactMatrix& M) {
    if (sigma.p != M.prime()) {
        throw std::domain_error("galois_matrix: mismatched primes");
    }
    ExactMatrix out(M.prime(), M.rows(), M.cols());
    for (size_t i = 0; i < M.rows(); ++i) {
        for (size_t j = 0; j < M.cols(); ++j) {
            out.at(i, j) = galois_apply(sigma, M.at(i, j));
        }
    }
    return out;
}

}  // namespace weilmin
