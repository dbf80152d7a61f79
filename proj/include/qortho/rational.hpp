#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qortho {

/// Exact rational scalar. GMP keeps numerator/denominator coprime with a
/// positive denominator, which is exactly the canonical form we need.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("rational: not an integer: " + q.get_str());
    if (!q.get_num().fits_slong_p()) throw std::overflow_error("rational: integer out of range");
    return q.get_num().get_si();
}

/// q^e for integer e (negative allowed when q != 0).
inline Rational rat_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw std::domain_error("rational: 0 raised to negative power");
        return Rational(0);
    }
    mpz_class num = q.get_num(), den = q.get_den();
    if (e < 0) {
        std::swap(num, den);
        e = -e;
        if (den < 0) { den = -den; num = -num; }
    }
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
    Rational r(pn, pd);
    r.canonicalize();
    return r;
}

/// Exact k-th root of q, when it exists in the rationals.
inline std::optional<Rational> rat_root(const Rational& q, unsigned long k) {
    if (k == 0) throw std::domain_error("rational: 0th root");
    if (k == 1) return q;
    if (q < 0 && k % 2 == 0) return std::nullopt;
    mpz_class rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), q.get_num().get_mpz_t(), k);
    int exact_d = mpz_root(rd.get_mpz_t(), q.get_den().get_mpz_t(), k);
    if (!exact_n || !exact_d) return std::nullopt;
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

/// q^(a/b) when the result is rational; nullopt otherwise.
inline std::optional<Rational> rat_pow_frac(const Rational& q, const Rational& e) {
    long den = to_long(Rational(e.get_den()));
    auto root = rat_root(q, static_cast<unsigned long>(den));
    if (!root) return std::nullopt;
    if (!e.get_num().fits_slong_p()) throw std::overflow_error("rational: exponent too large");
    return rat_pow(*root, e.get_num().get_si());
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

/// Parses "n" or "n/d"; returns nullopt on malformed input.
inline std::optional<Rational> rat_parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    try {
        Rational q(s);
        if (q.get_den() == 0) return std::nullopt;
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace qortho
