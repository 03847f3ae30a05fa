#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace weilmin {

// Exact arbitrary-precision arithmetic is delegated to GMP. mpq_class keeps
// values in lowest terms with a positive denominator, which is exactly the
// canonical form the rest of the library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Wire format for rationals is "num/den" (den omitted means den = 1).
inline std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0) {
            throw std::invalid_argument("parse_rational: denominator must be positive in \"" + s + "\"");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational \"" + s + "\"");
    }
}

}  // namespace weilmin
