#include "qortho/pairing.hpp"

namespace qortho {

namespace {

Weight eps(int i, int dim) {
    Weight w = Weight::zero(dim);
    w.coords[i] = 1;
    return w;
}

}  // namespace

PairingTable::PairingTable(const RootSystem& rs) : rs_(rs) {
    const int n = rs.rank();
    const int dim = rs.espace_dim();
    exps_.assign(n, std::vector<std::pair<Rational, Rational>>(n));
    auto ip = [&](int j, int i) { return inner(eps(j, dim), rs.simple_root(i)); };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational a, b;
            switch (rs.type().family) {
                case Family::A:
                    a = ip(j, i);
                    b = ip(j + 1, i);
                    break;
                case Family::B:
                    if (j + 1 < n) {
                        a = 2 * ip(j, i);
                        b = 2 * ip(j + 1, i);
                    } else if (i + 1 < n) {
                        a = 2 * ip(n - 1, i);
                        b = 0;
                    } else {
                        a = ip(n - 1, n - 1);
                        b = -a;
                    }
                    break;
                case Family::C:
                    if (j + 1 < n) {
                        a = ip(j, i);
                        b = ip(j + 1, i);
                    } else if (i + 1 < n) {
                        a = 2 * ip(n - 1, i);
                        b = 0;
                    } else {
                        a = ip(n - 1, n - 1);
                        b = -a;
                    }
                    break;
                case Family::D:
                    if (j + 1 < n) {
                        a = ip(j, i);
                        b = ip(j + 1, i);
                    } else if (i != n - 2) {
                        a = ip(n - 2, i);
                        b = -ip(n - 1, i);
                    } else {
                        a = ip(n - 1, n - 2);
                        b = -ip(n - 2, n - 2);
                    }
                    break;
            }
            exps_[i][j] = {a, b};
        }
    }
}

const std::pair<Rational, Rational>& PairingTable::omega_exps(int i, int j) const {
    if (i < 0 || j < 0 || i >= rs_.rank() || j >= rs_.rank())
        throw pairing_error("omega_pairing: index out of range");
    return exps_[i][j];
}

CoeffExpr PairingTable::omega_pairing(int i, int j) const {
    const auto& [a, b] = omega_exps(i, j);
    return CoeffExpr::monomial(1, a, b);
}

CoeffExpr PairingTable::omega_pairing(int i, int j, long pi, long pj) const {
    const auto& [a, b] = omega_exps(i, j);
    Rational k(pi);
    k *= Rational(pj);
    return CoeffExpr::monomial(1, a * k, b * k);
}

CoeffExpr PairingTable::pair_group_like(const RootVector& zeta, const RootVector& eta) const {
    Rational a(0), b(0);
    for (int i = 0; i < rs_.rank(); ++i)
        for (int j = 0; j < rs_.rank(); ++j) {
            Rational k(zeta.coeffs[i]);
            k *= Rational(eta.coeffs[j]);
            if (k == 0) continue;
            a += exps_[i][j].first * k;
            b += exps_[i][j].second * k;
        }
    return CoeffExpr::monomial(1, a, b);
}

std::vector<Rational> PairingTable::checked_root_coords(const Weight& w) const {
    if (!rs_.in_weight_lattice(w))
        throw pairing_error("weight outside the weight lattice: " + w.str());
    return rs_.root_coords(w);
}

CoeffExpr PairingTable::pair_weights(const Weight& lambda, const Weight& mu) const {
    auto p = checked_root_coords(lambda);
    auto q = checked_root_coords(mu);
    Rational a(0), b(0);
    for (int i = 0; i < rs_.rank(); ++i) {
        if (p[i] == 0) continue;
        for (int j = 0; j < rs_.rank(); ++j) {
            Rational k = p[i] * q[j];
            if (k == 0) continue;
            a += exps_[i][j].first * k;
            b += exps_[i][j].second * k;
        }
    }
    return CoeffExpr::monomial(1, a, b);
}

CharacterValue PairingTable::hat_lambda(const Weight& lambda) const {
    auto p = checked_root_coords(lambda);
    const int n = rs_.rank();
    CharacterValue cv;
    cv.on_omega.reserve(n);
    cv.on_omega_prime.reserve(n);
    for (int j = 0; j < n; ++j) {
        Rational a(0), b(0);
        for (int i = 0; i < n; ++i) {
            a += exps_[i][j].first * p[i];
            b += exps_[i][j].second * p[i];
        }
        cv.on_omega.push_back(CoeffExpr::monomial(1, a, b));
    }
    for (int i = 0; i < n; ++i) {
        Rational a(0), b(0);
        for (int j = 0; j < n; ++j) {
            a += exps_[i][j].first * p[j];
            b += exps_[i][j].second * p[j];
        }
        cv.on_omega_prime.push_back(CoeffExpr::monomial(1, -a, -b));
    }
    return cv;
}

CoeffExpr PairingTable::f_form(const Weight& lambda, const Weight& mu) const {
    return pair_weights(mu, lambda).inv();
}

bool PairingTable::hat_injectivity_check(const std::vector<Weight>& weights) const {
    std::vector<CharacterValue> vals;
    vals.reserve(weights.size());
    for (const auto& w : weights) vals.push_back(hat_lambda(w));
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (std::size_t j = i + 1; j < weights.size(); ++j)
            if (!(weights[i] == weights[j]) && vals[i] == vals[j]) return false;
    return true;
}

CoeffExpr PairingTable::r_i(int i) const {
    return CoeffExpr::monomial(1, rs_.d_exp(i), 0);
}

CoeffExpr PairingTable::s_i(int i) const {
    return CoeffExpr::monomial(1, 0, rs_.d_exp(i));
}

}  // namespace qortho
