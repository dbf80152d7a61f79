#include "qortho/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace qortho {

LieType LieType::parse(const std::string& text) {
    if (text.size() < 2) throw rootdata_error("bad Lie type '" + text + "'");
    char f = text[0];
    if (f != 'A' && f != 'B' && f != 'C' && f != 'D')
        throw rootdata_error("bad Lie type family '" + text + "'");
    int rank = 0;
    try {
        std::size_t used = 0;
        rank = std::stoi(text.substr(1), &used);
        if (used + 1 != text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw rootdata_error("bad Lie type rank '" + text + "'");
    }
    LieType t{static_cast<Family>(f), rank};
    if (rank < 1) throw rootdata_error("rank must be >= 1");
    if ((t.family == Family::B || t.family == Family::C) && rank < 2)
        throw rootdata_error("types B and C need rank >= 2");
    if (t.family == Family::D && rank < 3) throw rootdata_error("type D needs rank >= 3");
    return t;
}

std::string LieType::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

Weight Weight::scaled(const Rational& c) const {
    Weight r = *this;
    for (auto& x : r.coords) x *= c;
    return r;
}

bool Weight::operator<(const Weight& o) const { return coords < o.coords; }

bool Weight::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

std::string Weight::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += coords[i].get_str();
    }
    return out + ")";
}

Rational inner(const Weight& x, const Weight& y) {
    Rational acc(0);
    for (std::size_t i = 0; i < x.coords.size(); ++i) acc += x.coords[i] * y.coords[i];
    return acc;
}

long RootVector::height() const {
    long h = 0;
    for (long c : coeffs) h += c;
    return h;
}

bool RootVector::is_nonnegative() const {
    for (long c : coeffs)
        if (c < 0) return false;
    return true;
}

bool RootVector::is_zero() const {
    for (long c : coeffs)
        if (c != 0) return false;
    return true;
}

RootVector RootVector::operator+(const RootVector& o) const {
    RootVector r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

std::optional<RootVector> RootVector::minus(const RootVector& o) const {
    RootVector r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        r.coeffs[i] -= o.coeffs[i];
        if (r.coeffs[i] < 0) return std::nullopt;
    }
    return r;
}

std::string RootVector::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coeffs[i]);
    }
    return out + "]";
}

Weight WeylElem::apply(const Weight& w) const {
    Weight out = Weight::zero(static_cast<int>(mat.size()));
    for (std::size_t i = 0; i < mat.size(); ++i)
        for (std::size_t j = 0; j < mat.size(); ++j) out.coords[i] += mat[i][j] * w.coords[j];
    return out;
}

namespace {

Weight eps(int i, int dim) {
    Weight w = Weight::zero(dim);
    w.coords[i] = 1;
    return w;
}

}  // namespace

RootSystem::RootSystem(LieType t) : type_(t) {
    const int n = t.rank;
    espace_ = (t.family == Family::A) ? n + 1 : n;

    // Simple roots.
    int chain = (t.family == Family::A) ? n : n - 1;
    for (int i = 0; i < chain; ++i) simple_.push_back(eps(i, espace_) - eps(i + 1, espace_));
    if (t.family == Family::B) simple_.push_back(eps(n - 1, espace_));
    if (t.family == Family::C) simple_.push_back(eps(n - 1, espace_).scaled(2));
    if (t.family == Family::D) simple_.push_back(eps(n - 2, espace_) + eps(n - 1, espace_));

    // Positive roots.
    if (t.family == Family::A) {
        for (int i = 0; i < espace_; ++i)
            for (int j = i + 1; j < espace_; ++j) positive_.push_back(eps(i, espace_) - eps(j, espace_));
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                positive_.push_back(eps(i, espace_) - eps(j, espace_));
                positive_.push_back(eps(i, espace_) + eps(j, espace_));
            }
        if (t.family == Family::B)
            for (int i = 0; i < n; ++i) positive_.push_back(eps(i, espace_));
        if (t.family == Family::C)
            for (int i = 0; i < n; ++i) positive_.push_back(eps(i, espace_).scaled(2));
    }

    rho_ = Weight::zero(espace_);
    for (const auto& a : positive_) rho_ = rho_ + a;
    rho_ = rho_.scaled(Rational(1, 2));

    cartan_.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cartan_[i][j] = to_long(coroot_pair(simple_[j], i));

    for (int i = 0; i < n; ++i) {
        Rational norm = inner(simple_[i], simple_[i]);
        dexp_.push_back(t.family == Family::B ? norm : norm / 2);
    }

    // Fundamental weights, closed forms per type.
    auto partial = [&](int k) {  // eps_0 + ... + eps_{k}
        Weight w = Weight::zero(espace_);
        for (int i = 0; i <= k; ++i) w.coords[i] = 1;
        return w;
    };
    for (int i = 0; i < n; ++i) {
        switch (t.family) {
            case Family::A: {
                // Projection of eps_1+...+eps_{i+1} onto the sum-zero hyperplane.
                Weight w = partial(i);
                Rational shift(i + 1, espace_);
                for (auto& c : w.coords) c -= shift;
                fund_.push_back(w);
                break;
            }
            case Family::C:
                fund_.push_back(partial(i));
                break;
            case Family::B:
                fund_.push_back(i + 1 < n ? partial(i) : partial(n - 1).scaled(Rational(1, 2)));
                break;
            case Family::D:
                if (i + 2 < n) {
                    fund_.push_back(partial(i));
                } else if (i + 2 == n) {
                    Weight w = partial(n - 1).scaled(Rational(1, 2));
                    w.coords[n - 1] = -w.coords[n - 1];
                    fund_.push_back(w);
                } else {
                    fund_.push_back(partial(n - 1).scaled(Rational(1, 2)));
                }
                break;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (coroot_pair(fund_[i], j) != Rational(i == j ? 1 : 0))
                throw rootdata_error("internal: fundamental weight " + std::to_string(i + 1) +
                                     " fails defining property for " + t.str());

    for (const auto& a : positive_) {
        auto rv = to_root_vector(a);
        if (!rv) throw rootdata_error("internal: positive root outside root lattice");
        positive_rv_.push_back(*rv);
    }
}

Rational RootSystem::coroot_pair(const Weight& x, int i) const {
    const Weight& a = simple_.at(i);
    return Rational(2) * inner(x, a) / inner(a, a);
}

Weight RootSystem::weight_from_fund_coeffs(const std::vector<Rational>& c) const {
    if (static_cast<int>(c.size()) != rank())
        throw rootdata_error("expected " + std::to_string(rank()) + " fundamental coefficients");
    Weight w = Weight::zero(espace_);
    for (int i = 0; i < rank(); ++i) w = w + fund_[i].scaled(c[i]);
    return w;
}

Weight RootSystem::weight_from_root_vector(const RootVector& z) const {
    Weight w = Weight::zero(espace_);
    for (int i = 0; i < rank(); ++i) w = w + simple_[i].scaled(Rational(z.coeffs[i]));
    return w;
}

std::vector<Rational> RootSystem::root_coords(const Weight& w) const {
    const int n = rank();
    std::vector<Rational> p(n, Rational(0));
    if (type_.family == Family::A) {
        // Partial sums: the gl-style section of the quotient by (1,...,1).
        Rational acc(0);
        for (int j = 0; j < n; ++j) {
            acc += w.coords[j];
            p[j] = acc;
        }
        return p;
    }
    // Triangular solve against the simple-root matrix.
    // alpha_i = eps_i - eps_{i+1} for i < n-1; last root per type.
    std::vector<Rational> c = w.coords;
    switch (type_.family) {
        case Family::B: {
            // p_i = c_0+...+c_i for i<n-1 handled by forward elimination below.
            Rational acc(0);
            for (int i = 0; i < n - 1; ++i) {
                acc += c[i];
                p[i] = acc;
            }
            // alpha_{n-1} = eps_{n-1}: p_{n-1} = c_{n-1} + p_{n-2}.
            p[n - 1] = c[n - 1] + (n >= 2 ? p[n - 2] : Rational(0));
            break;
        }
        case Family::C: {
            Rational acc(0);
            for (int i = 0; i < n - 1; ++i) {
                acc += c[i];
                p[i] = acc;
            }
            p[n - 1] = (c[n - 1] + (n >= 2 ? p[n - 2] : Rational(0))) / 2;
            break;
        }
        case Family::D: {
            Rational acc(0);
            for (int i = 0; i < n - 2; ++i) {
                acc += c[i];
                p[i] = acc;
            }
            Rational pn2 = (n >= 3) ? p[n - 3] : Rational(0);
            // c_{n-2} = p_{n-2} + p_{n-1} - pn2 ; c_{n-1} = p_{n-1} - p_{n-2}.
            p[n - 2] = (c[n - 2] - c[n - 1] + pn2) / 2;
            p[n - 1] = (c[n - 2] + c[n - 1] + pn2) / 2;
            break;
        }
        case Family::A:
            break;
    }
    // Verify (guards the triangular formulas).
    Weight back = weight_from_coords(p);
    if (!(back == w)) throw rootdata_error("internal: root_coords failed for " + w.str());
    return p;
}

Weight RootSystem::weight_from_coords(const std::vector<Rational>& p) const {
    Weight w = Weight::zero(espace_);
    for (int i = 0; i < rank(); ++i) w = w + simple_[i].scaled(p[i]);
    return w;
}

std::optional<RootVector> RootSystem::to_root_vector(const Weight& w) const {
    std::vector<Rational> p;
    try {
        p = root_coords(w);
    } catch (const rootdata_error&) {
        return std::nullopt;
    }
    if (type_.family == Family::A) {
        // Lift must actually lie in the root span: coordinates sum to zero.
        Rational sum(0);
        for (const auto& c : w.coords) sum += c;
        if (sum != 0) return std::nullopt;
    }
    RootVector z = RootVector::zero(rank());
    for (int i = 0; i < rank(); ++i) {
        if (!is_integer(p[i])) return std::nullopt;
        z.coeffs[i] = to_long(p[i]);
    }
    return z;
}

bool RootSystem::in_weight_lattice(const Weight& w) const {
    if (static_cast<int>(w.coords.size()) != espace_) return false;
    if (type_.family == Family::A) {
        Rational sum(0);
        for (const auto& c : w.coords) sum += c;
        if (sum != 0) return false;
    }
    for (int i = 0; i < rank(); ++i)
        if (!is_integer(coroot_pair(w, i))) return false;
    return true;
}

bool RootSystem::is_dominant(const Weight& w) const {
    for (int i = 0; i < rank(); ++i)
        if (coroot_pair(w, i) < 0) return false;
    return true;
}

bool RootSystem::is_dominant_integral(const Weight& w) const {
    if (!in_weight_lattice(w)) return false;
    for (int i = 0; i < rank(); ++i) {
        Rational p = coroot_pair(w, i);
        if (p < 0 || !is_integer(p)) return false;
    }
    return true;
}

bool RootSystem::lemma11_check() const {
    const int n = rank();
    auto ip = [&](int j, int i) {  // (eps_j, alpha_i), 0-based
        return inner(eps(j, espace_), simple_[i]);
    };
    // (eps_{j+1}, alpha_i) = -(eps_i, alpha_j) for i, j < n (all families).
    int lim = (type_.family == Family::A) ? n : n - 1;
    for (int i = 0; i < lim; ++i)
        for (int j = 0; j < lim; ++j)
            if (ip(j + 1, i) != -ip(i, j)) return false;
    switch (type_.family) {
        case Family::A:
            return true;
        case Family::B:
            for (int j = 0; j + 1 < n; ++j)
                if (ip(j + 1, n - 1) != -ip(n - 1, j)) return false;
            return true;
        case Family::C:
            for (int j = 0; j + 1 < n; ++j)
                if (ip(j + 1, n - 1) != Rational(-2) * ip(n - 1, j)) return false;
            return true;
        case Family::D:
            for (int j = 0; j < n; ++j) {
                if (j == n - 2) {
                    if (ip(n - 2, n - 1) != ip(n - 2, n - 2)) return false;
                } else {
                    // (eps_j, alpha_n) = -(eps_n, alpha_{j-1}), alpha_0 := 0.
                    Rational rhs = (j == 0) ? Rational(0) : -ip(n - 1, j - 1);
                    if (ip(j, n - 1) != rhs) return false;
                }
            }
            return true;
    }
    return false;
}

WeylElem RootSystem::simple_reflection(int i) const {
    WeylElem w;
    w.mat.assign(espace_, std::vector<Rational>(espace_, Rational(0)));
    const Weight& a = simple_.at(i);
    Rational norm = inner(a, a);
    for (int r = 0; r < espace_; ++r) {
        for (int c = 0; c < espace_; ++c) {
            Rational v = (r == c) ? Rational(1) : Rational(0);
            v -= Rational(2) * a.coords[r] * a.coords[c] / norm;
            w.mat[r][c] = v;
        }
    }
    return w;
}

const std::vector<WeylElem>& RootSystem::weyl_group() const {
    if (!weyl_.empty()) return weyl_;
    if (rank() > 4)
        throw rootdata_error("Weyl group enumeration capped at rank 4, got " + type_.str());
    std::vector<WeylElem> gens;
    for (int i = 0; i < rank(); ++i) gens.push_back(simple_reflection(i));
    std::set<WeylElem> seen;
    WeylElem id;
    id.mat.assign(espace_, std::vector<Rational>(espace_, Rational(0)));
    for (int i = 0; i < espace_; ++i) id.mat[i][i] = 1;
    seen.insert(id);
    std::vector<WeylElem> frontier{id};
    while (!frontier.empty()) {
        std::vector<WeylElem> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                WeylElem p;
                p.mat.assign(espace_, std::vector<Rational>(espace_, Rational(0)));
                for (int r = 0; r < espace_; ++r)
                    for (int c = 0; c < espace_; ++c)
                        for (int k = 0; k < espace_; ++k) p.mat[r][c] += g.mat[r][k] * w.mat[k][c];
                if (seen.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    weyl_.assign(seen.begin(), seen.end());
    return weyl_;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w) const {
    std::set<Weight> seen{w};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& x : frontier)
            for (int i = 0; i < rank(); ++i) {
                Weight y = x - simple_[i].scaled(coroot_pair(x, i));
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return std::vector<Weight>(seen.begin(), seen.end());
}

Weight RootSystem::lambda_w(const Weight& lambda, const WeylElem& w) const {
    return w.apply(lambda + rho_) - rho_;
}

Weight RootSystem::dominant_rep(const Weight& w) const {
    Weight x = w;
    for (;;) {
        bool moved = false;
        for (int i = 0; i < rank(); ++i) {
            Rational p = coroot_pair(x, i);
            if (p < 0) {
                x = x - simple_[i].scaled(p);
                moved = true;
            }
        }
        if (!moved) return x;
    }
}

Weight RootSystem::lowest_weight(const Weight& lambda) const { return -dominant_rep(-lambda); }

long long RootSystem::kostant_partitions(const RootVector& z) const {
    if (!z.is_nonnegative()) return 0;
    auto it = kostant_memo_.find(z);
    if (it != kostant_memo_.end()) return it->second;
    // DP over the fixed positive-root list.
    std::function<long long(RootVector, std::size_t)> rec = [&](RootVector rem,
                                                                std::size_t idx) -> long long {
        if (rem.is_zero()) return 1;
        if (idx == positive_rv_.size()) return 0;
        long long total = 0;
        std::optional<RootVector> cur = rem;
        for (;;) {
            total += rec(*cur, idx + 1);
            cur = cur->minus(positive_rv_[idx]);
            if (!cur) break;
        }
        return total;
    };
    long long v = rec(z, 0);
    kostant_memo_.emplace(z, v);
    return v;
}

long long RootSystem::weyl_dim(const Weight& lambda) const {
    if (!is_dominant_integral(lambda))
        throw rootdata_error("weyl_dim: weight not dominant integral: " + lambda.str());
    Rational num(1), den(1);
    for (const auto& a : positive_) {
        num *= inner(lambda + rho_, a);
        den *= inner(rho_, a);
    }
    Rational d = num / den;
    if (!is_integer(d)) throw rootdata_error("internal: Weyl dimension not integral");
    return to_long(d);
}

std::map<Weight, long long> RootSystem::classical_character(const Weight& lambda) const {
    if (!is_dominant_integral(lambda))
        throw rootdata_error("character: weight not dominant integral: " + lambda.str());
    // Freudenthal on dominant weights, then spread over Weyl orbits.
    Weight low = lowest_weight(lambda);
    auto lzv = to_root_vector(lambda - low);
    if (!lzv) throw rootdata_error("internal: lambda - w0(lambda) not in root lattice");
    long maxh = lzv->height();

    std::map<Weight, long long> dom_mult;
    // Enumerate lambda - Q+ slices by height, retaining dominant ones. A
    // weight belongs to the support hull iff its dominant representative is
    // below lambda in dominance order.
    auto in_hull = [&](const Weight& x) {
        auto d = to_root_vector(lambda - dominant_rep(x));
        return d && d->is_nonnegative();
    };
    std::set<Weight> level{lambda};
    std::vector<Weight> doms;
    for (long h = 0; h <= maxh && !level.empty(); ++h) {
        for (const auto& m : level)
            if (is_dominant(m)) doms.push_back(m);
        std::set<Weight> next;
        for (const auto& m : level)
            for (int i = 0; i < rank(); ++i) {
                Weight x = m - simple_[i];
                if (in_hull(x)) next.insert(x);
            }
        level = std::move(next);
    }

    const Rational nl = inner(lambda + rho_, lambda + rho_);
    dom_mult[lambda] = 1;
    for (const auto& mu : doms) {
        if (mu == lambda) continue;
        Rational denom = nl - inner(mu + rho_, mu + rho_);
        if (denom == 0) {
            dom_mult[mu] = 0;
            continue;
        }
        Rational sum(0);
        for (const auto& a : positive_) {
            Weight x = mu;
            for (;;) {
                x = x + a;
                Weight rep = dominant_rep(x);
                auto it = dom_mult.find(rep);
                if (it == dom_mult.end()) break;
                if (it->second == 0) break;
                sum += Rational(static_cast<long>(it->second)) * inner(x, a);
            }
        }
        Rational m = Rational(2) * sum / denom;
        if (!is_integer(m) || m < 0) throw rootdata_error("internal: Freudenthal non-integral");
        if (m != 0) dom_mult[mu] = to_long(m);
    }

    std::map<Weight, long long> out;
    for (const auto& [mu, m] : dom_mult) {
        if (m == 0) continue;
        for (const auto& x : weyl_orbit(mu)) out[x] = m;
    }
    return out;
}

}  // namespace qortho
