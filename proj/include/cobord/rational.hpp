// Exact rational scalars on top of GMP, plus the few integer helpers the
// rest of the library leans on.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cobord {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den) {
    if (den == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer(const Rational& q) {
    if (!is_integer(q))
        throw std::domain_error("expected an integer, got " + q.get_str());
    return q.get_num();
}

/// q^e for any integer e; e < 0 requires q != 0.
inline Rational pow_rational(const Rational& q, long e) {
    if (e == 0)
        return Rational(1);
    if (q == 0 && e < 0)
        throw std::domain_error("cannot invert zero");
    Rational base = e >= 0 ? q : Rational(1) / q;
    unsigned long n = static_cast<unsigned long>(e >= 0 ? e : -e);
    Rational acc(1);
    while (n) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

/// Generalized binomial C(top, k) = top(top-1)...(top-k+1)/k!, exact for any
/// integer top (negative included). This is the Hilbert-polynomial reading of
/// chi(P^n, O(a)) = C(n+a, n).
inline Integer binomial(const Integer& top, unsigned k) {
    Rational acc(1);
    for (unsigned i = 0; i < k; ++i) {
        acc *= Rational(top - static_cast<long>(i));
        acc /= Rational(static_cast<long>(i) + 1);
    }
    return to_integer(acc);
}

inline Integer binomial(long top, unsigned k) { return binomial(Integer(top), k); }

/// Least nonnegative residue.
inline Integer mod_nonneg(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0)
        r += m;
    return r;
}

/// Canonical text form: "p" or "p/q". Never a float.
inline std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace cobord
