#pragma once

#include <map>
#include <unordered_map>

#include "weilmin/weil.hpp"

namespace weilmin {

struct GroupTooLargeError : std::runtime_error {
    explicit GroupTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

// Element of SL2(F_p), entries reduced mod p with a d - b c = 1.
struct SL2Elt {
    long p;
    long a, b, c, d;

    SL2Elt(long p_in, long a_in, long b_in, long c_in, long d_in);

    bool operator==(const SL2Elt& rhs) const = default;
};

SL2Elt sl2_identity(long p);
SL2Elt sl2_s(long p);  // [0 -1; 1 0]
SL2Elt sl2_t(long p);  // [1 1; 0 1]
SL2Elt sl2_mul(const SL2Elt& g, const SL2Elt& h);
SL2Elt sl2_inv(const SL2Elt& g);

// Word in the generators; 's' exponents live mod 4, 't' exponents mod p.
struct GenWord {
    struct Factor {
        char tag;  // 's' or 't'
        long exponent;
    };
    std::vector<Factor> factors;
};

// Bruhat-style decomposition: for c != 0,
//   g = t^{(a+1)/c} s t^{c} s t^{(d+1)/c},
// and upper-triangular g is reduced to that case through g s. The exponent
// formulas are validated by exhaustive round-trip tests, not trusted from
// the derivation.
GenWord word_decompose(const SL2Elt& g);

SL2Elt evaluate_word_sl2(const GenWord& word, long p);

// Evaluates any generator model at group elements, with cached generator
// powers. Well-definedness across alternative words for the same element is
// guaranteed by the presentation relations (and spot-checked in tests).
class ModelEvaluator {
  public:
    ModelEvaluator(ExactMatrix S, ExactMatrix T, long p);

    long prime() const { return p_; }
    size_t dimension() const { return s_powers_[0].rows(); }

    ExactMatrix evaluate(const GenWord& word) const;
    ExactMatrix evaluate(const SL2Elt& g) const;
    CycElt character(const SL2Elt& g) const;  // trace of evaluate(g)

  private:
    long p_;
    std::vector<ExactMatrix> s_powers_;  // S^0..S^3
    std::vector<ExactMatrix> t_powers_;  // T^0..T^{p-1}
    // prefix products t^u s t^v s, keyed by (u, v); covers the bulk of the
    // group when scanning all elements
    mutable std::map<std::pair<long, long>, ExactMatrix> prefix_cache_;

    const ExactMatrix* cached_prefix(const GenWord& word) const;
};

ModelEvaluator make_evaluator(const WeilModel& m);

// Full-group character scan: inner product sum_g chi(g) chi(g^{-1}) / |G|,
// chi(1), and quadratic-integrality of every character value.
struct CharacterScan {
    Rational inner_product;
    Rational chi_identity;
    unsigned long group_order = 0;
    bool all_values_quadratic = false;
    std::string first_nonquadratic;  // witness, empty when all pass
};

CharacterScan character_scan(const ExactMatrix& S, const ExactMatrix& T, long p, unsigned long group_cap);

// Just the inner product; throws GroupTooLargeError when |G| exceeds the cap.
Rational character_inner_product(const ExactMatrix& S, const ExactMatrix& T, long p, unsigned long group_cap);

unsigned long sl2_group_order(long p);  // p (p^2 - 1)

}  // namespace weilmin
