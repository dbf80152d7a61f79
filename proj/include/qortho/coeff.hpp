#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qortho/rational.hpp"

namespace qortho {

struct coeff_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct division_by_zero : coeff_error {
    division_by_zero() : coeff_error("division by zero") {}
};
struct exponent_bound_error : coeff_error {
    using coeff_error::coeff_error;
};
struct evaluation_error : coeff_error {
    using coeff_error::coeff_error;
};
struct parse_error : coeff_error {
    std::size_t pos;
    parse_error(const std::string& msg, std::size_t p)
        : coeff_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

/// Largest reduced denominator allowed in an r/s exponent. Quarter-integer
/// norms scaled by the type-B convention need 8; anything beyond signals a
/// convention bug and is rejected rather than truncated.
long max_exponent_denominator();
void set_max_exponent_denominator(long bound);

/// c * r^a * s^b with rational a, b and c != 0.
struct RSMonomial {
    Rational coeff;
    Rational rexp;
    Rational sexp;
};

/// Finite sum of RSMonomials: terms sorted by (rexp, sexp) lex descending,
/// no repeated exponent pair, no zero coefficients. Empty sum is 0.
class LaurentExpr {
  public:
    LaurentExpr() = default;
    static LaurentExpr zero() { return LaurentExpr(); }
    static LaurentExpr one() { return constant(Rational(1)); }
    static LaurentExpr constant(const Rational& c);
    static LaurentExpr monomial(const Rational& c, const Rational& rexp, const Rational& sexp);
    static LaurentExpr var_r() { return monomial(1, 1, 0); }
    static LaurentExpr var_s() { return monomial(1, 0, 1); }
    /// Builds from arbitrary terms: merges, sorts, drops zeros.
    static LaurentExpr from_terms(std::vector<RSMonomial> terms);

    const std::vector<RSMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    /// Lex-largest term; the "leading" term in canonical order.
    const RSMonomial& leading() const;

    LaurentExpr operator+(const LaurentExpr& o) const;
    LaurentExpr operator-(const LaurentExpr& o) const;
    LaurentExpr operator*(const LaurentExpr& o) const;
    LaurentExpr operator-() const;
    bool operator==(const LaurentExpr& o) const;
    bool operator!=(const LaurentExpr& o) const { return !(*this == o); }

    LaurentExpr scaled(const Rational& c) const;
    /// Multiplies by c * r^a * s^b.
    LaurentExpr mul_term(const RSMonomial& t) const;
    /// Divides exactly by c * r^a * s^b.
    LaurentExpr div_term(const RSMonomial& t) const;
    LaurentExpr pow(unsigned long e) const;

    std::string str() const;

  private:
    std::vector<RSMonomial> terms_;
    friend LaurentExpr laurent_gcd(const LaurentExpr&, const LaurentExpr&);
    friend LaurentExpr laurent_div_exact(const LaurentExpr&, const LaurentExpr&);
};

/// GCD of the polynomial parts (defined up to a monomial factor; the result
/// is normalized to leading coefficient 1, leading exponents 0).
LaurentExpr laurent_gcd(const LaurentExpr& a, const LaurentExpr& b);
/// Exact quotient; throws coeff_error if b does not divide a.
LaurentExpr laurent_div_exact(const LaurentExpr& a, const LaurentExpr& b);

/// Element of the fraction field Q(r,s) with rational exponents allowed.
/// Canonical form: gcd(num, den) = 1 and den's leading term is +1 * r^0 * s^0
/// (the extracted monomial and scalar being absorbed into num), so structural
/// equality of canonical forms is field equality.
class CoeffExpr {
  public:
    CoeffExpr() : num_(), den_(LaurentExpr::one()) {}
    CoeffExpr(long n) : num_(LaurentExpr::constant(Rational(n))), den_(LaurentExpr::one()) {}
    explicit CoeffExpr(const Rational& c)
        : num_(LaurentExpr::constant(c)), den_(LaurentExpr::one()) {}
    explicit CoeffExpr(const LaurentExpr& n) : num_(n), den_(LaurentExpr::one()) {}
    CoeffExpr(const LaurentExpr& n, const LaurentExpr& d);

    static CoeffExpr zero() { return CoeffExpr(); }
    static CoeffExpr one() { return CoeffExpr(1); }
    static CoeffExpr monomial(const Rational& c, const Rational& rexp, const Rational& sexp) {
        return CoeffExpr(LaurentExpr::monomial(c, rexp, sexp));
    }
    static CoeffExpr var_r() { return CoeffExpr(LaurentExpr::var_r()); }
    static CoeffExpr var_s() { return CoeffExpr(LaurentExpr::var_s()); }

    const LaurentExpr& num() const { return num_; }
    const LaurentExpr& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }

    CoeffExpr operator+(const CoeffExpr& o) const;
    CoeffExpr operator-(const CoeffExpr& o) const;
    CoeffExpr operator*(const CoeffExpr& o) const;
    CoeffExpr operator-() const;
    CoeffExpr inv() const;
    CoeffExpr operator/(const CoeffExpr& o) const { return *this * o.inv(); }
    bool operator==(const CoeffExpr& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const CoeffExpr& o) const { return !(*this == o); }

    /// x^e for rational e; requires x to be a single monomial.
    CoeffExpr mono_pow(const Rational& e) const;
    /// x^e for integer e, any nonzero x.
    CoeffExpr int_pow(long e) const;

    /// Exact evaluation at r = r0, s = s0.
    Rational specialize(const Rational& r0, const Rational& s0) const;

    std::string str() const;
    static CoeffExpr parse(const std::string& text);

  private:
    LaurentExpr num_;
    LaurentExpr den_;
    void canonicalize();
};

inline CoeffExpr operator*(long c, const CoeffExpr& x) { return CoeffExpr(c) * x; }

/// [m]_i = (r_i^m - s_i^m)/(r_i - s_i) with r_i = r^d, s_i = s^d, as the
/// expanded geometric sum (denominator 1).
CoeffExpr quantum_int(long m, const Rational& d);

/// [m]_i! = [1]_i [2]_i ... [m]_i.
CoeffExpr quantum_factorial(long m, const Rational& d);

}  // namespace qortho
