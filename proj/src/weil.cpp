#include "weilmin/weil.hpp"

namespace weilmin {

const char* series_name(Series s) {
    switch (s) {
        case Series::full: return "full";
        case Series::principal: return "principal";
        case Series::cuspidal: return "cuspidal";
    }
    return "?";
}

WeilModel weil_full(const QuadForm& q) {
    const long p = q.p;
    const CycElt ginv = gauss_sum(p, q.c).inverse();
    ExactMatrix S(p, p, p);
    ExactMatrix T(p, p, p);
    for (long j = 0; j < p; ++j) {
        for (long k = 0; k < p; ++k) {
            S.at(j, k) = ginv * CycElt::zeta_pow(p, -q.b_exponent(j, k));
        }
        T.at(j, j) = CycElt::zeta_pow(p, q.q_exponent(j));
    }
    return WeilModel{q, Series::full, std::move(S), std::move(T)};
}

namespace {

void require_full(const WeilModel& m, const char* op) {
    if (m.series != Series::full) {
        throw std::domain_error(std::string(op) + ": expected a full model, got " + series_name(m.series));
    }
}

}  // namespace

WeilModel restrict_even(const WeilModel& m) {
    require_full(m, "restrict_even");
    const long p = m.q.p;
    const long r = (p - 1) / 2;
    const CycElt ginv = gauss_sum(p, m.q.c).inverse();
    ExactMatrix S(p, r + 1, r + 1);
    ExactMatrix T(p, r + 1, r + 1);
    for (long j = 0; j <= r; ++j) {
        for (long k = 0; k <= r; ++k) {
            if (k == 0) {
                S.at(j, k) = ginv;
            } else if (j == 0) {
                S.at(j, k) = ginv * Rational(2);
            } else {
                const long e = m.q.b_exponent(j, k);
                S.at(j, k) = ginv * (CycElt::zeta_pow(p, e) + CycElt::zeta_pow(p, -e));
            }
        }
        T.at(j, j) = CycElt::zeta_pow(p, m.q.q_exponent(j));
    }
    return WeilModel{m.q, Series::principal, std::move(S), std::move(T)};
}

WeilModel restrict_odd(const WeilModel& m) {
    require_full(m, "restrict_odd");
    const long p = m.q.p;
    const long r = (p - 1) / 2;
    const CycElt ginv = gauss_sum(p, m.q.c).inverse();
    ExactMatrix S(p, r, r);
    ExactMatrix T(p, r, r);
    for (long j = 0; j < r; ++j) {
        for (long k = 0; k < r; ++k) {
            const long e = m.q.b_exponent(j + 1, k + 1);
            S.at(j, k) = ginv * (CycElt::zeta_pow(p, -e) - CycElt::zeta_pow(p, e));
        }
        T.at(j, j) = CycElt::zeta_pow(p, m.q.q_exponent(j + 1));
    }
    return WeilModel{m.q, Series::cuspidal, std::move(S), std::move(T)};
}

ExactMatrix parity_basis(long p) {
    const long r = (p - 1) / 2;
    ExactMatrix C(p, p, p);
    const CycElt one = CycElt::one(p);
    for (long j = 0; j <= r; ++j) {
        C.at(j, j) = one;
        if (j != 0) C.at(p - j, j) = one;
    }
    for (long j = 0; j < r; ++j) {
        C.at(j + 1, r + 1 + j) = one;
        C.at(p - 1 - j, r + 1 + j) = -one;
    }
    return C;
}

RelationReport check_relations(const ExactMatrix& S, const ExactMatrix& T, long p) {
    if (S.rows() != S.cols() || T.rows() != T.cols() || S.rows() != T.rows()) {
        throw std::domain_error("check_relations: S and T must be square of equal size");
    }
    RelationReport rep;
    const ExactMatrix S2 = S * S;
    rep.s4_identity = (S2 * S2).is_identity();
    rep.s2_equals_st3 = ((S * T).pow(3) == S2);
    rep.tp_identity = T.pow(static_cast<unsigned long>(p)).is_identity();
    rep.s2_commutes_t = (S2 * T == T * S2);
    return rep;
}

RelationReport check_relations(const WeilModel& m) { return check_relations(m.S, m.T, m.q.p); }

}  // namespace weilmin
