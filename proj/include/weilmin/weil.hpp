#pragma once

#include "weilmin/heisenberg.hpp"

namespace weilmin {

enum class Series { full, principal, cuspidal };

const char* series_name(Series s);

// Generator matrices of one model of the Weil representation (or of one of
// its two irreducible constituents). Satisfies S^4 = I, S^2 = (ST)^3,
// T^p = I; the dimension is p, (p+1)/2 or (p-1)/2 by series.
struct WeilModel {
    QuadForm q;
    Series series;
    ExactMatrix S;
    ExactMatrix T;
};

// Full p-dimensional model in the delta basis:
//   S = g_Q^{-1} [zeta^{-2 c j k}],  T = diag(zeta^{c j^2}),  g_Q = gauss_sum(p, c).
// The minus sign in the S exponent is forced by S^2 = (ST)^3 once T carries
// the positive Q-exponent, and makes S intertwine sigma with sigma o psi_s.
WeilModel weil_full(const QuadForm& q);

// Restriction to the even functions in the basis
// delta_0, delta_1 + delta_{p-1}, ..., delta_r + delta_{r+1}; dimension r+1.
WeilModel restrict_even(const WeilModel& m);

// Restriction to the odd functions in the basis
// delta_1 - delta_{p-1}, ..., delta_r - delta_{r+1}; dimension r.
WeilModel restrict_odd(const WeilModel& m);

// Change of basis from the delta basis to (even basis | odd basis); columns
// are the b+ and b- vectors. Conjugating the full model by it must produce
// the two restricted models as diagonal blocks.
ExactMatrix parity_basis(long p);

struct RelationReport {
    bool s4_identity = false;      // S^4 = I
    bool s2_equals_st3 = false;    // S^2 = (ST)^3
    bool tp_identity = false;      // T^p = I
    bool s2_commutes_t = false;    // S^2 T = T S^2

    bool all_pass() const { return s4_identity && s2_equals_st3 && tp_identity && s2_commutes_t; }
};

RelationReport check_relations(const ExactMatrix& S, const ExactMatrix& T, long p);
RelationReport check_relations(const WeilModel& m);

}  // namespace weilmin
