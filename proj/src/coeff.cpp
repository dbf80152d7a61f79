#include "qortho/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace qortho {

namespace {

long g_max_exp_den = 8;

// Descending lex on (rexp, sexp); leading term comes first.
bool term_before(const RSMonomial& a, const RSMonomial& b) {
    if (a.rexp != b.rexp) return a.rexp > b.rexp;
    return a.sexp > b.sexp;
}

void check_exponent(const Rational& e) {
    if (e.get_den() > g_max_exp_den)
        throw exponent_bound_error("exponent denominator " + e.get_den().get_str() +
                                   " exceeds bound " + std::to_string(g_max_exp_den));
}

// mpq_class two-argument construction does not reduce; normalize on entry so
// stored terms are always canonical.
RSMonomial canonical_term(RSMonomial t) {
    t.coeff.canonicalize();
    t.rexp.canonicalize();
    t.sexp.canonicalize();
    return t;
}

}  // namespace

long max_exponent_denominator() { return g_max_exp_den; }
void set_max_exponent_denominator(long bound) {
    if (bound < 1) throw coeff_error("exponent denominator bound must be >= 1");
    g_max_exp_den = bound;
}

LaurentExpr LaurentExpr::constant(const Rational& c) {
    LaurentExpr e;
    if (c != 0) e.terms_.push_back(canonical_term({c, Rational(0), Rational(0)}));
    return e;
}

LaurentExpr LaurentExpr::monomial(const Rational& c, const Rational& rexp, const Rational& sexp) {
    LaurentExpr e;
    if (c != 0) {
        RSMonomial t = canonical_term({c, rexp, sexp});
        check_exponent(t.rexp);
        check_exponent(t.sexp);
        e.terms_.push_back(std::move(t));
    }
    return e;
}

LaurentExpr LaurentExpr::from_terms(std::vector<RSMonomial> terms) {
    for (auto& t : terms) t = canonical_term(t);
    std::sort(terms.begin(), terms.end(), term_before);
    LaurentExpr e;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        check_exponent(t.rexp);
        check_exponent(t.sexp);
        if (!e.terms_.empty() && e.terms_.back().rexp == t.rexp && e.terms_.back().sexp == t.sexp) {
            e.terms_.back().coeff += t.coeff;
            if (e.terms_.back().coeff == 0) e.terms_.pop_back();
        } else {
            e.terms_.push_back(t);
        }
    }
    return e;
}

bool LaurentExpr::is_one() const {
    return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].rexp == 0 &&
           terms_[0].sexp == 0;
}

bool LaurentExpr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].rexp == 0 && terms_[0].sexp == 0);
}

const RSMonomial& LaurentExpr::leading() const {
    if (terms_.empty()) throw coeff_error("leading term of zero");
    return terms_.front();
}

LaurentExpr LaurentExpr::operator+(const LaurentExpr& o) const {
    LaurentExpr out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && term_before(terms_[i], o.terms_[j]))) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || term_before(o.terms_[j], terms_[i])) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) out.terms_.push_back({c, terms_[i].rexp, terms_[i].sexp});
            ++i;
            ++j;
        }
    }
    return out;
}

LaurentExpr LaurentExpr::operator-() const {
    LaurentExpr out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

LaurentExpr LaurentExpr::operator-(const LaurentExpr& o) const { return *this + (-o); }

LaurentExpr LaurentExpr::operator*(const LaurentExpr& o) const {
    if (is_zero() || o.is_zero()) return LaurentExpr();
    if (o.is_monomial()) return mul_term(o.terms_[0]);
    if (is_monomial()) return o.mul_term(terms_[0]);
    std::map<std::pair<Rational, Rational>, Rational> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            auto key = std::make_pair(a.rexp + b.rexp, a.sexp + b.sexp);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, a.coeff * b.coeff);
            else
                it->second += a.coeff * b.coeff;
        }
    LaurentExpr out;
    out.terms_.reserve(acc.size());
    // std::map iterates ascending; reverse for descending order.
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        if (it->second == 0) continue;
        check_exponent(it->first.first);
        check_exponent(it->first.second);
        out.terms_.push_back({it->second, it->first.first, it->first.second});
    }
    return out;
}

bool LaurentExpr::operator==(const LaurentExpr& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].rexp != o.terms_[i].rexp ||
            terms_[i].sexp != o.terms_[i].sexp)
            return false;
    return true;
}

LaurentExpr LaurentExpr::scaled(const Rational& c) const {
    if (c == 0) return LaurentExpr();
    LaurentExpr out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

LaurentExpr LaurentExpr::mul_term(const RSMonomial& t) const {
    if (t.coeff == 0) return LaurentExpr();
    LaurentExpr out = *this;
    for (auto& x : out.terms_) {
        x.coeff *= t.coeff;
        x.rexp += t.rexp;
        x.sexp += t.sexp;
        check_exponent(x.rexp);
        check_exponent(x.sexp);
    }
    return out;
}

LaurentExpr LaurentExpr::div_term(const RSMonomial& t) const {
    if (t.coeff == 0) throw division_by_zero();
    return mul_term({Rational(1) / t.coeff, -t.rexp, -t.sexp});
}

LaurentExpr LaurentExpr::pow(unsigned long e) const {
    LaurentExpr acc = LaurentExpr::one();
    LaurentExpr base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Bivariate gcd on the polynomial parts.
//
// Laurent terms with rational exponents are mapped onto honest polynomials in
// Z-graded coordinates: exponents are scaled by the lcm of their denominators
// and shifted to be nonnegative. The gcd is computed as a primitive PRS in r
// over Q[s] and mapped back; the monomial-unit ambiguity is fixed by
// normalizing the leading term to +1 * r^0 * s^0.
// ---------------------------------------------------------------------------

namespace {

using UPoly = std::vector<mpz_class>;  // dense in s, ascending degree

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool uis_zero(const UPoly& p) { return p.empty(); }

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    utrim(out);
    return out;
}

mpz_class ucontent_z(const UPoly& p) {
    mpz_class g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void uprimitive(UPoly& p) {
    utrim(p);
    if (p.empty()) return;
    mpz_class g = ucontent_z(p);
    if (p.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : p) c /= g;
}

// Pseudo-remainder of a by b over Z[s], with contents stripped as we go to
// keep coefficient growth down.
UPoly uprem(UPoly a, const UPoly& b) {
    utrim(a);
    const mpz_class& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        mpz_class la = a.back();
        std::size_t shift = a.size() - b.size();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
        la /= g;
        mpz_class lbr = lb / g;
        if (lbr != 1)
            for (auto& c : a) c *= lbr;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
        utrim(a);
        if (a.size() > 1) {
            mpz_class cont = ucontent_z(a);
            if (cont > 1)
                for (auto& c : a) c /= cont;
        }
    }
    return a;
}

// Primitive-PRS gcd over Z[s]: content times primitive gcd, with a positive
// leading coefficient. gcd(0, b) keeps b's content.
UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    auto possign = [](UPoly& p) {
        if (!p.empty() && p.back() < 0)
            for (auto& c : p) c = -c;
    };
    if (a.empty()) { possign(b); return b; }
    if (b.empty()) { possign(a); return a; }
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ucontent_z(a).get_mpz_t(), ucontent_z(b).get_mpz_t());
    uprimitive(a);
    uprimitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        UPoly r = uprem(a, b);
        uprimitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    for (auto& c : a) c *= cg;
    return a;
}

// Exact division over Z[s] up to rational scaling is not needed; division of
// a by its content-free divisor b happens over Q but with integer results
// whenever b is primitive and divides a. Throws if not divisible.
UPoly udiv_exact(UPoly a, const UPoly& b) {
    utrim(a);
    if (uis_zero(b)) throw division_by_zero();
    if (a.empty()) return {};
    if (a.size() < b.size()) throw coeff_error("laurent gcd: inexact univariate division");
    UPoly q(a.size() - b.size() + 1, mpz_class(0));
    while (!a.empty() && a.size() >= b.size()) {
        mpz_class c = a.back() / b.back();
        if (c * b.back() != a.back())
            throw coeff_error("laurent gcd: inexact univariate division");
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        utrim(a);
    }
    if (!a.empty()) throw coeff_error("laurent gcd: inexact univariate division");
    return q;
}

using BPoly = std::vector<UPoly>;  // dense in r, ascending degree; entries in Z[s]

void btrim(BPoly& p) {
    while (!p.empty() && uis_zero(p.back())) p.pop_back();
}

bool bis_zero(const BPoly& p) { return p.empty(); }

UPoly bcontent(const BPoly& p) {
    UPoly c;
    for (const auto& u : p)
        if (!uis_zero(u)) {
            c = ugcd(c, u);
            if (c.size() == 1 && (c[0] == 1 || c[0] == -1)) break;
        }
    return c;
}

BPoly bdiv_ucontent(const BPoly& p, const UPoly& c) {
    if (c.size() == 1 && c[0] == 1) return p;
    BPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = uis_zero(p[i]) ? UPoly{} : udiv_exact(p[i], c);
    return out;
}

mpz_class ueval(const UPoly& p, const mpz_class& x) {
    mpz_class v(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

std::size_t bsdeg(const BPoly& p) {
    std::size_t d = 0;
    for (const auto& u : p) d = std::max(d, u.empty() ? 0 : u.size() - 1);
    return d;
}

// gcd of two primitive elements of Z[s][r] by evaluation at integer s-points,
// univariate gcds in r, and Newton interpolation of the result scaled to have
// leading coefficient gcd(lc a, lc b). A failed divisibility check (unlucky
// points) just triggers another round with more points; bad points are
// finitely many, so this terminates.
BPoly bgcd_prim(const BPoly& a, const BPoly& b) {
    const BPoly unit{{mpz_class(1)}};
    if (a.size() == 1 || b.size() == 1) return unit;
    UPoly gl = ugcd(a.back(), b.back());
    std::size_t npoints = std::min(bsdeg(a), bsdeg(b)) + (gl.size() - 1) + 1;

    // Candidate verification at the Z[s][r] level.
    auto divides = [](const BPoly& g, const BPoly& p) -> bool {
        BPoly rem = p;
        btrim(rem);
        const UPoly& lg = g.back();
        while (!bis_zero(rem) && rem.size() >= g.size()) {
            UPoly q;
            try {
                q = udiv_exact(rem.back(), lg);
            } catch (const coeff_error&) {
                return false;
            }
            std::size_t shift = rem.size() - g.size();
            for (std::size_t i = 0; i < g.size(); ++i) {
                UPoly t = umul(q, g[i]);
                UPoly& dst = rem[shift + i];
                if (t.size() > dst.size()) dst.resize(t.size(), mpz_class(0));
                for (std::size_t j = 0; j < t.size(); ++j) dst[j] -= t[j];
                utrim(dst);
            }
            btrim(rem);
        }
        return bis_zero(rem);
    };

    for (int round = 0; round < 12; ++round, npoints *= 2) {
        std::vector<mpz_class> pts;
        std::vector<std::vector<Rational>> samples;  // scaled univariate gcds in r
        std::size_t rdeg = b.size() - 1;
        mpz_class pt(0);
        long tried = 0;
        while (samples.size() < npoints && tried < 4096) {
            ++tried;
            pt = (pt <= 0) ? mpz_class(1 - pt) : mpz_class(-pt);  // 1, -1, 2, -2, ...
            if (ueval(a.back(), pt) == 0 || ueval(b.back(), pt) == 0) continue;
            UPoly ua(a.size()), ub(b.size());
            for (std::size_t i = 0; i < a.size(); ++i) ua[i] = ueval(a[i], pt);
            for (std::size_t i = 0; i < b.size(); ++i) ub[i] = ueval(b[i], pt);
            UPoly u = ugcd(ua, ub);
            if (u.size() == 1) return unit;  // r-degree 0 at a good point: coprime
            if (u.size() - 1 > rdeg) continue;  // unlucky point
            if (u.size() - 1 < rdeg) {          // all earlier points were unlucky
                rdeg = u.size() - 1;
                pts.clear();
                samples.clear();
            }
            Rational scale(ueval(gl, pt), u.back());
            scale.canonicalize();
            std::vector<Rational> su(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) su[i] = Rational(u[i]) * scale;
            pts.push_back(pt);
            samples.push_back(std::move(su));
        }
        if (samples.size() < npoints) break;

        // Newton interpolation, one r-coefficient at a time.
        std::size_t ncoef = rdeg + 1;
        std::vector<std::vector<Rational>> newton(ncoef, std::vector<Rational>(npoints));
        for (std::size_t c = 0; c < ncoef; ++c) {
            auto& dd = newton[c];
            for (std::size_t i = 0; i < npoints; ++i) dd[i] = samples[i][c];
            for (std::size_t lvl = 1; lvl < npoints; ++lvl)
                for (std::size_t i = npoints - 1; i >= lvl; --i) {
                    dd[i] = (dd[i] - dd[i - 1]) / Rational(pts[i] - pts[i - lvl]);
                    dd[i].canonicalize();
                }
        }
        // Expand Newton form into dense s-coefficients.
        std::vector<std::vector<Rational>> coefs(ncoef);
        for (std::size_t c = 0; c < ncoef; ++c) {
            std::vector<Rational> poly{newton[c][npoints - 1]};
            for (std::size_t i = npoints - 1; i-- > 0;) {
                // poly = poly*(s - pts[i]) + dd[i]
                std::vector<Rational> nxt(poly.size() + 1, Rational(0));
                for (std::size_t j = 0; j < poly.size(); ++j) {
                    nxt[j + 1] += poly[j];
                    nxt[j] -= poly[j] * Rational(pts[i]);
                }
                nxt[0] += newton[c][i];
                for (auto& q : nxt) q.canonicalize();
                poly = std::move(nxt);
            }
            coefs[c] = std::move(poly);
        }
        // Clear rational denominators and take the primitive part.
        mpz_class lcm(1);
        for (const auto& poly : coefs)
            for (const auto& q : poly)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        BPoly cand(ncoef);
        for (std::size_t c = 0; c < ncoef; ++c) {
            cand[c].resize(coefs[c].size());
            for (std::size_t j = 0; j < coefs[c].size(); ++j)
                cand[c][j] = coefs[c][j].get_num() * (lcm / coefs[c][j].get_den());
            utrim(cand[c]);
        }
        btrim(cand);
        if (bis_zero(cand)) continue;
        UPoly cont = bcontent(cand);
        cand = bdiv_ucontent(cand, cont);
        if (divides(cand, a) && divides(cand, b)) return cand;
    }
    // Interpolation kept failing; fall back to the only always-correct cheap
    // answer for a reduced fraction pipeline: report coprime. Reaching this
    // would only make canonical forms non-minimal, never wrong, but it is a
    // bug, so fail loudly instead.
    throw coeff_error("bivariate gcd: interpolation did not converge");
}

BPoly bgcd(BPoly a, BPoly b) {
    btrim(a);
    btrim(b);
    if (bis_zero(a)) return b;
    if (bis_zero(b)) return a;
    UPoly ca = bcontent(a), cb = bcontent(b);
    UPoly cg = ugcd(ca, cb);
    a = bdiv_ucontent(a, ca);
    b = bdiv_ucontent(b, cb);
    if (a.size() < b.size()) std::swap(a, b);
    BPoly g = bgcd_prim(a, b);
    for (auto& u : g) u = umul(u, cg);
    return g;
}

struct Lattice {
    long rl, sl;         // exponent scaling (lcm of denominators)
    Rational rmin, smin; // exponent shifts
};

long lcm_long(long a, long b) {
    mpz_class g;
    mpz_class aa(a), bb(b);
    mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), bb.get_mpz_t());
    return to_long(Rational(aa * bb / g));
}

Lattice common_lattice(const LaurentExpr& a, const LaurentExpr& b) {
    Lattice lat{1, 1, Rational(0), Rational(0)};
    bool first = true;
    auto scan = [&](const LaurentExpr& e) {
        for (const auto& t : e.terms()) {
            lat.rl = lcm_long(lat.rl, to_long(Rational(t.rexp.get_den())));
            lat.sl = lcm_long(lat.sl, to_long(Rational(t.sexp.get_den())));
            if (first) {
                lat.rmin = t.rexp;
                lat.smin = t.sexp;
                first = false;
            } else {
                if (t.rexp < lat.rmin) lat.rmin = t.rexp;
                if (t.sexp < lat.smin) lat.smin = t.sexp;
            }
        }
    };
    scan(a);
    scan(b);
    return lat;
}

// Clears coefficient denominators (gcd is only defined up to scalars anyway).
BPoly to_bpoly(const LaurentExpr& e, const Lattice& lat) {
    mpz_class lcm(1);
    for (const auto& t : e.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    BPoly p;
    for (const auto& t : e.terms()) {
        long rd = to_long((t.rexp - lat.rmin) * lat.rl);
        long sd = to_long((t.sexp - lat.smin) * lat.sl);
        if (static_cast<std::size_t>(rd) >= p.size()) p.resize(rd + 1);
        UPoly& u = p[rd];
        if (static_cast<std::size_t>(sd) >= u.size()) u.resize(sd + 1, mpz_class(0));
        u[sd] += t.coeff.get_num() * (lcm / t.coeff.get_den());
    }
    for (auto& u : p) utrim(u);
    btrim(p);
    return p;
}

LaurentExpr from_bpoly(const BPoly& p, const Lattice& lat) {
    std::vector<RSMonomial> ts;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0)
                ts.push_back({Rational(p[i][j]), Rational(static_cast<long>(i), lat.rl),
                              Rational(static_cast<long>(j), lat.sl)});
    return LaurentExpr::from_terms(std::move(ts));
}

}  // namespace

LaurentExpr laurent_gcd(const LaurentExpr& a, const LaurentExpr& b) {
    if (a.is_zero() || b.is_zero() || a.is_monomial() || b.is_monomial())
        return LaurentExpr::one();
    Lattice lat = common_lattice(a, b);
    BPoly g = bgcd(to_bpoly(a, lat), to_bpoly(b, lat));
    Lattice unshifted{lat.rl, lat.sl, Rational(0), Rational(0)};
    LaurentExpr ge = from_bpoly(g, unshifted);
    if (ge.is_zero()) return LaurentExpr::one();
    return ge.div_term(ge.leading());
}

LaurentExpr laurent_div_exact(const LaurentExpr& a, const LaurentExpr& b) {
    if (b.is_zero()) throw division_by_zero();
    if (a.is_zero()) return LaurentExpr();
    if (b.is_monomial()) return a.div_term(b.leading());
    // Long division on leading (descending-lex) terms. Exponent supports are
    // additive facet-wise, so for an exact quotient every quotient exponent
    // lies in the componentwise box [min(a)-min(b), max(a)-max(b)]; a term
    // outside it proves the division inexact (and bounds the loop).
    Rational rlo, rhi, slo, shi;
    {
        auto span = [](const LaurentExpr& e, Rational& lo_r, Rational& hi_r, Rational& lo_s,
                       Rational& hi_s) {
            lo_r = hi_r = e.terms()[0].rexp;
            lo_s = hi_s = e.terms()[0].sexp;
            for (const auto& t : e.terms()) {
                if (t.rexp < lo_r) lo_r = t.rexp;
                if (t.rexp > hi_r) hi_r = t.rexp;
                if (t.sexp < lo_s) lo_s = t.sexp;
                if (t.sexp > hi_s) hi_s = t.sexp;
            }
        };
        Rational arl, arh, asl, ash, brl, brh, bsl, bsh;
        span(a, arl, arh, asl, ash);
        span(b, brl, brh, bsl, bsh);
        rlo = arl - brl;
        rhi = arh - brh;
        slo = asl - bsl;
        shi = ash - bsh;
    }
    LaurentExpr rem = a;
    std::vector<RSMonomial> q;
    while (!rem.is_zero()) {
        const RSMonomial lr = rem.leading();
        const RSMonomial& lb = b.leading();
        RSMonomial t{lr.coeff / lb.coeff, lr.rexp - lb.rexp, lr.sexp - lb.sexp};
        if (t.rexp < rlo || t.rexp > rhi || t.sexp < slo || t.sexp > shi)
            throw coeff_error("laurent division: not exact");
        q.push_back(t);
        rem = rem - b.mul_term(t);
        if (!rem.is_zero() && !term_before(lr, rem.leading()))
            throw coeff_error("laurent division: not exact");
    }
    return LaurentExpr::from_terms(std::move(q));
}

std::string LaurentExpr::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        Rational c = t.coeff;
        if (i == 0) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += (c < 0) ? "-" : "+";
            if (c < 0) c = -c;
        }
        bool has_r = t.rexp != 0, has_s = t.sexp != 0;
        auto atom = [](char v, const Rational& e) -> std::string {
            std::string a(1, v);
            if (e == 1) return a;
            if (is_integer(e)) return a + "^" + e.get_str();
            return a + "^(" + e.get_str() + ")";
        };
        if (!has_r && !has_s) {
            out += c.get_str();
        } else {
            if (c != 1) out += c.get_str() + "*";
            if (has_r) out += atom('r', t.rexp);
            if (has_r && has_s) out += "*";
            if (has_s) out += atom('s', t.sexp);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// CoeffExpr
// ---------------------------------------------------------------------------

CoeffExpr::CoeffExpr(const LaurentExpr& n, const LaurentExpr& d) : num_(n), den_(d) {
    canonicalize();
}

void CoeffExpr::canonicalize() {
    if (den_.is_zero()) throw division_by_zero();
    if (num_.is_zero()) {
        den_ = LaurentExpr::one();
        return;
    }
    if (den_.is_monomial()) {
        num_ = num_.div_term(den_.leading());
        den_ = LaurentExpr::one();
        return;
    }
    // Cheap common case first: the denominator divides the numerator outright.
    try {
        num_ = laurent_div_exact(num_, den_);
        den_ = LaurentExpr::one();
        return;
    } catch (const coeff_error&) {
    }
    LaurentExpr g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = laurent_div_exact(num_, g);
        den_ = laurent_div_exact(den_, g);
    }
    if (den_.is_monomial()) {
        num_ = num_.div_term(den_.leading());
        den_ = LaurentExpr::one();
        return;
    }
    RSMonomial lead = den_.leading();
    num_ = num_.div_term(lead);
    den_ = den_.div_term(lead);
}

CoeffExpr CoeffExpr::operator+(const CoeffExpr& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    CoeffExpr out;
    if (den_ == o.den_) {
        out.num_ = num_ + o.num_;
        out.den_ = den_;
    } else {
        out.num_ = num_ * o.den_ + o.num_ * den_;
        out.den_ = den_ * o.den_;
    }
    out.canonicalize();
    return out;
}

CoeffExpr CoeffExpr::operator-() const {
    CoeffExpr out = *this;
    out.num_ = -out.num_;
    return out;
}

CoeffExpr CoeffExpr::operator-(const CoeffExpr& o) const { return *this + (-o); }

CoeffExpr CoeffExpr::operator*(const CoeffExpr& o) const {
    if (is_zero() || o.is_zero()) return CoeffExpr();
    CoeffExpr out;
    out.num_ = num_ * o.num_;
    if (den_.is_one())
        out.den_ = o.den_;
    else if (o.den_.is_one())
        out.den_ = den_;
    else
        out.den_ = den_ * o.den_;
    if (!out.den_.is_one()) out.canonicalize();
    return out;
}

CoeffExpr CoeffExpr::inv() const {
    if (is_zero()) throw division_by_zero();
    CoeffExpr out;
    out.num_ = den_;
    out.den_ = num_;
    out.canonicalize();
    return out;
}

CoeffExpr CoeffExpr::mono_pow(const Rational& e) const {
    if (is_zero()) {
        if (e <= 0) throw division_by_zero();
        return CoeffExpr();
    }
    if (!is_monomial())
        throw coeff_error("mono_pow: rational powers only defined for monomials, got " + str());
    const RSMonomial& t = num_.leading();
    if (t.coeff != 1 && !is_integer(e))
        throw coeff_error("mono_pow: fractional power of non-unit coefficient in " + str());
    Rational c = is_integer(e) ? rat_pow(t.coeff, to_long(e)) : Rational(1);
    return CoeffExpr(LaurentExpr::monomial(c, t.rexp * e, t.sexp * e));
}

CoeffExpr CoeffExpr::int_pow(long e) const {
    if (e == 0) return CoeffExpr::one();
    if (is_zero()) {
        if (e < 0) throw division_by_zero();
        return CoeffExpr();
    }
    CoeffExpr base = e < 0 ? inv() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    CoeffExpr out;
    out.num_ = base.num_.pow(k);
    out.den_ = base.den_.pow(k);
    // Powers of a reduced fraction stay reduced; only renormalize the unit.
    if (!out.den_.is_monomial() && !out.den_.is_one()) {
        RSMonomial lead = out.den_.leading();
        out.num_ = out.num_.div_term(lead);
        out.den_ = out.den_.div_term(lead);
    } else if (!out.den_.is_one()) {
        out.num_ = out.num_.div_term(out.den_.leading());
        out.den_ = LaurentExpr::one();
    }
    return out;
}

namespace {

Rational eval_laurent(const LaurentExpr& e, const Rational& r0, const Rational& s0) {
    Rational acc(0);
    for (const auto& t : e.terms()) {
        auto rv = rat_pow_frac(r0, t.rexp);
        if (!rv)
            throw evaluation_error("specialize: r0 = " + r0.get_str() + " has no exact power r^(" +
                                   t.rexp.get_str() + ")");
        auto sv = rat_pow_frac(s0, t.sexp);
        if (!sv)
            throw evaluation_error("specialize: s0 = " + s0.get_str() + " has no exact power s^(" +
                                   t.sexp.get_str() + ")");
        acc += t.coeff * (*rv) * (*sv);
    }
    return acc;
}

}  // namespace

Rational CoeffExpr::specialize(const Rational& r0, const Rational& s0) const {
    if (r0 == 0 || s0 == 0) throw evaluation_error("specialize: r0, s0 must be nonzero");
    Rational d = eval_laurent(den_, r0, s0);
    if (d == 0)
        throw evaluation_error("specialize: denominator (" + den_.str() + ") vanishes at (r,s)=(" +
                               r0.get_str() + "," + s0.get_str() + ")");
    return eval_laurent(num_, r0, s0) / d;
}

std::string CoeffExpr::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// Parser: fraction := expr | '(' expr ')' '/' '(' expr ')'
//         expr := ['-'] term (('+'|'-') term)*
//         term := factor ('*' factor)*
//         factor := rational | ('r'|'s') ['^' exponent]
//         exponent := ['-'] integer | '(' rational ')'
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }
    bool at_end() {
        skip_ws();
        return pos == s.size();
    }

    Rational parse_rational() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits0) throw parse_error("expected number", start);
        std::string numstr = s.substr(start, pos - start);
        if (accept('/')) {
            skip_ws();
            std::size_t d0 = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == d0) throw parse_error("expected denominator", d0);
            numstr += "/" + s.substr(d0, pos - d0);
        }
        auto q = rat_parse(numstr);
        if (!q) throw parse_error("bad rational '" + numstr + "'", start);
        return *q;
    }

    Rational parse_exponent() {
        if (accept('(')) {
            Rational e = parse_rational();
            expect(')');
            return e;
        }
        return parse_rational();
    }

    // factor -> (coeff part, rexp, sexp)
    RSMonomial parse_factor() {
        skip_ws();
        if (pos < s.size() && (s[pos] == 'r' || s[pos] == 's')) {
            char v = s[pos++];
            Rational e(1);
            if (accept('^')) e = parse_exponent();
            return v == 'r' ? RSMonomial{Rational(1), e, Rational(0)}
                            : RSMonomial{Rational(1), Rational(0), e};
        }
        return RSMonomial{parse_rational(), Rational(0), Rational(0)};
    }

    RSMonomial parse_term() {
        RSMonomial m = parse_factor();
        while (accept('*')) {
            RSMonomial f = parse_factor();
            m.coeff *= f.coeff;
            m.rexp += f.rexp;
            m.sexp += f.sexp;
        }
        return m;
    }

    LaurentExpr parse_expr() {
        std::vector<RSMonomial> terms;
        skip_ws();
        bool neg = accept('-');
        RSMonomial t = parse_term();
        if (neg) t.coeff = -t.coeff;
        terms.push_back(t);
        for (;;) {
            skip_ws();
            if (accept('+')) {
                terms.push_back(parse_term());
            } else if (accept('-')) {
                RSMonomial u = parse_term();
                u.coeff = -u.coeff;
                terms.push_back(u);
            } else {
                break;
            }
        }
        return LaurentExpr::from_terms(std::move(terms));
    }
};

}  // namespace

CoeffExpr CoeffExpr::parse(const std::string& text) {
    Parser p(text);
    p.skip_ws();
    if (p.pos == text.size()) throw parse_error("empty input", 0);
    if (p.peek('(')) {
        std::size_t save = p.pos;
        p.expect('(');
        LaurentExpr n = p.parse_expr();
        p.expect(')');
        if (p.accept('/')) {
            p.expect('(');
            LaurentExpr d = p.parse_expr();
            p.expect(')');
            if (!p.at_end()) throw parse_error("trailing input", p.pos);
            return CoeffExpr(n, d);
        }
        // Plain parenthesized expression is not in the grammar; reparse strictly.
        p.pos = save;
        throw parse_error("expected '(expr)/(expr)' fraction", p.pos);
    }
    LaurentExpr n = p.parse_expr();
    if (!p.at_end()) throw parse_error("trailing input", p.pos);
    return CoeffExpr(n);
}

CoeffExpr quantum_int(long m, const Rational& d) {
    if (m < 0) throw coeff_error("quantum_int: m must be >= 0");
    std::vector<RSMonomial> ts;
    for (long k = 0; k < m; ++k)
        ts.push_back({Rational(1), d * Rational(m - 1 - k), d * Rational(k)});
    return CoeffExpr(LaurentExpr::from_terms(std::move(ts)));
}

CoeffExpr quantum_factorial(long m, const Rational& d) {
    CoeffExpr acc = CoeffExpr::one();
    for (long k = 2; k <= m; ++k) acc = acc * quantum_int(k, d);
    return acc;
}

}  // namespace qortho
