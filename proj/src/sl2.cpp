#include "weilmin/sl2.hpp"

namespace weilmin {

namespace {

long mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long inv_mod(long a, long p) {
    long result = 1, base = mod(a, p);
    for (long e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return result;
}

}  // namespace

SL2Elt::SL2Elt(long p_in, long a_in, long b_in, long c_in, long d_in)
    : p(p_in), a(mod(a_in, p_in)), b(mod(b_in, p_in)), c(mod(c_in, p_in)), d(mod(d_in, p_in)) {
    if (!is_odd_prime(p)) {
        throw std::domain_error("SL2Elt: p = " + std::to_string(p) + " is not an odd prime");
    }
    if (mod(a * d - b * c, p) != 1) {
        throw std::domain_error("SL2Elt: determinant is not 1 mod " + std::to_string(p));
    }
}

SL2Elt sl2_identity(long p) { return SL2Elt(p, 1, 0, 0, 1); }
SL2Elt sl2_s(long p) { return SL2Elt(p, 0, -1, 1, 0); }
SL2Elt sl2_t(long p) { return SL2Elt(p, 1, 1, 0, 1); }

SL2Elt sl2_mul(const SL2Elt& g, const SL2Elt& h) {
    if (g.p != h.p) {
        throw std::domain_error("sl2_mul: mismatched primes");
    }
    return SL2Elt(g.p, g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
                  g.c * h.b + g.d * h.d);
}

SL2Elt sl2_inv(const SL2Elt& g) { return SL2Elt(g.p, g.d, -g.b, -g.c, g.a); }

GenWord word_decompose(const SL2Elt& g) {
    const long p = g.p;
    GenWord word;
    auto push_t = [&](long e) {
        e = mod(e, p);
        if (e != 0) word.factors.push_back({'t', e});
    };
    auto push_s = [&](long e) {
        e = mod(e, 4);
        if (e != 0) word.factors.push_back({'s', e});
    };
    if (g == sl2_s(p)) {
        push_s(1);
        return word;
    }
    if (g.c == 0) {
        // upper triangular; t-power when a = 1, otherwise reduce through g s
        if (g.a == 1) {
            push_t(g.b);
            return word;
        }
        GenWord inner = word_decompose(sl2_mul(g, sl2_s(p)));
        word = std::move(inner);
        push_s(3);  // s^{-1}
        return word;
    }
    const long cinv = inv_mod(g.c, p);
    push_t((g.a + 1) * cinv);
    push_s(1);
    push_t(g.c);
    push_s(1);
    push_t((g.d + 1) * cinv);
    return word;
}

SL2Elt evaluate_word_sl2(const GenWord& word, long p) {
    SL2Elt result = sl2_identity(p);
    const SL2Elt s = sl2_s(p);
    const SL2Elt t = sl2_t(p);
    for (const auto& f : word.factors) {
        const SL2Elt& gen = (f.tag == 's') ? s : t;
        for (long i = 0; i < f.exponent; ++i) result = sl2_mul(result, gen);
    }
    return result;
}

ModelEvaluator::ModelEvaluator(ExactMatrix S, ExactMatrix T, long p) : p_(p) {
    if (S.rows() != S.cols() || T.rows() != T.cols() || S.rows() != T.rows()) {
        throw std::domain_error("ModelEvaluator: S and T must be square of equal size");
    }
    s_powers_.push_back(ExactMatrix::identity(S.prime(), S.rows()));
    for (int k = 1; k < 4; ++k) s_powers_.push_back(s_powers_.back() * S);
    t_powers_.push_back(ExactMatrix::identity(T.prime(), T.rows()));
    for (long k = 1; k < p; ++k) t_powers_.push_back(t_powers_.back() * T);
}

ModelEvaluator make_evaluator(const WeilModel& m) { return ModelEvaluator(m.S, m.T, m.q.p); }

const ExactMatrix* ModelEvaluator::cached_prefix(const GenWord& word) const {
    // Bruhat words look like t^u s t^v s t^w with u or w possibly absent;
    // cache the t^u s t^v s prefix, which is shared across all w.
    const auto& f = word.factors;
    size_t n = f.size();
    if (n < 3) return nullptr;
    size_t last = n - 1;
    if (f[last].tag != 't') return nullptr;
    size_t i = 0;
    long u = 0;
    if (f[i].tag == 't') {
        u = f[i].exponent;
        ++i;
    }
    if (last - i != 3) return nullptr;
    if (f[i].tag != 's' || f[i].exponent != 1) return nullptr;
    if (f[i + 1].tag != 't') return nullptr;
    if (f[i + 2].tag != 's' || f[i + 2].exponent != 1) return nullptr;
    const long v = f[i + 1].exponent;
    auto key = std::make_pair(u, v);
    auto it = prefix_cache_.find(key);
    if (it == prefix_cache_.end()) {
        ExactMatrix prefix = t_powers_[mod(u, p_)] * s_powers_[1] * t_powers_[mod(v, p_)] * s_powers_[1];
        it = prefix_cache_.emplace(key, std::move(prefix)).first;
    }
    return &it->second;
}

ExactMatrix ModelEvaluator::evaluate(const GenWord& word) const {
    if (const ExactMatrix* prefix = cached_prefix(word)) {
        return *prefix * t_powers_[mod(word.factors.back().exponent, p_)];
    }
    ExactMatrix result = s_powers_[0];
    for (const auto& f : word.factors) {
        result = result * (f.tag == 's' ? s_powers_[mod(f.exponent, 4)] : t_powers_[mod(f.exponent, p_)]);
    }
    return result;
}

ExactMatrix ModelEvaluator::evaluate(const SL2Elt& g) const {
    if (g.p != p_) {
        throw std::domain_error("ModelEvaluator::evaluate: mismatched primes");
    }
    return evaluate(word_decompose(g));
}

CycElt ModelEvaluator::character(const SL2Elt& g) const { return evaluate(g).trace(); }

unsigned long sl2_group_order(long p) {
    return static_cast<unsigned long>(p) * (static_cast<unsigned long>(p) * p - 1);
}

CharacterScan character_scan(const ExactMatrix& S, const ExactMatrix& T, long p, unsigned long group_cap) {
    const unsigned long order = sl2_group_order(p);
    if (order > group_cap) {
        throw GroupTooLargeError("character sum skipped: |SL2(F_" + std::to_string(p) + ")| = " +
                                 std::to_string(order) + " exceeds cap " + std::to_string(group_cap));
    }
    ModelEvaluator eval(S, T, p);
    const long cyc_p = S.prime();

    auto pack = [p](long a, long b, long c, long d) {
        return ((a * p + b) * p + c) * p + d;
    };
    std::unordered_map<long, CycElt> chi;
    chi.reserve(order);

    CharacterScan scan{Rational(0), Rational(0), order, true, ""};
    for (long a = 0; a < p; ++a) {
        for (long b = 0; b < p; ++b) {
            for (long c = 0; c < p; ++c) {
                for (long d = 0; d < p; ++d) {
                    if (mod(a * d - b * c, p) != 1) continue;
                    const SL2Elt g(p, a, b, c, d);
                    CycElt value = eval.character(g);
                    if (scan.all_values_quadratic && !to_quadratic(value)) {
                        scan.all_values_quadratic = false;
                        scan.first_nonquadratic = "chi([" + std::to_string(a) + "," + std::to_string(b) + ";" +
                                                  std::to_string(c) + "," + std::to_string(d) +
                                                  "]) = " + value.to_string();
                    }
                    chi.emplace(pack(a, b, c, d), std::move(value));
                }
            }
        }
    }

    CycElt total = CycElt::zero(cyc_p);
    for (long a = 0; a < p; ++a) {
        for (long b = 0; b < p; ++b) {
            for (long c = 0; c < p; ++c) {
                for (long d = 0; d < p; ++d) {
                    if (mod(a * d - b * c, p) != 1) continue;
                    // g^{-1} = [d, -b; -c, a]
                    total += chi.at(pack(a, b, c, d)) *
                             chi.at(pack(mod(d, p), mod(-b, p), mod(-c, p), mod(a, p)));
                }
            }
        }
    }
    const CycElt normalized = total * Rational(1, static_cast<long>(order));
    if (!normalized.is_rational()) {
        throw std::logic_error("character_scan: inner product is not rational");
    }
    scan.inner_product = normalized.coeffs()[0];

    const CycElt chi1 = chi.at(pack(1, 0, 0, 1));
    if (!chi1.is_rational()) {
        throw std::logic_error("character_scan: chi(1) is not rational");
    }
    scan.chi_identity = chi1.coeffs()[0];
    return scan;
}

Rational character_inner_product(const ExactMatrix& S, const ExactMatrix& T, long p, unsigned long group_cap) {
    return character_scan(S, T, p, group_cap).inner_product;
}

}  // namespace weilmin
