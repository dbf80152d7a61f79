#include <doctest.h>

#include <random>

#include "qortho/pairing.hpp"

using namespace qortho;

namespace {

CoeffExpr mono(long c, const Rational& a, const Rational& b) {
    return CoeffExpr::monomial(Rational(c), a, b);
}

Weight eps(int i, int dim) {
    Weight w = Weight::zero(dim);
    w.coords[i] = 1;
    return w;
}

Weight random_lattice_weight(const RootSystem& rs, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Rational> c;
    for (int i = 0; i < rs.rank(); ++i) c.push_back(Rational(coef(rng)));
    return rs.weight_from_fund_coeffs(c);
}

}  // namespace

TEST_CASE("generator pairing tables") {
    RootSystem a3(LieType::parse("A3"));
    PairingTable pa(a3);
    CHECK(pa.omega_pairing(0, 0) == mono(1, 1, -1));
    CHECK(pa.omega_pairing(0, 2) == CoeffExpr::one());  // distant nodes
    CHECK(pa.omega_pairing(2, 0) == CoeffExpr::one());

    RootSystem b3(LieType::parse("B3"));
    PairingTable pb(b3);
    CHECK(pb.omega_pairing(2, 2) == mono(1, 1, -1));

    RootSystem c3(LieType::parse("C3"));
    PairingTable pc(c3);
    CHECK(pc.omega_pairing(2, 2) == mono(1, 2, -2));

    RootSystem d4(LieType::parse("D4"));
    PairingTable pd(d4);
    // (eps_4, alpha_3) = -1 and (eps_3, alpha_3) = 1 give r^-1 s^-1.
    CHECK(pd.omega_pairing(2, 3) == mono(1, -1, -1));

    CHECK_THROWS_AS(pd.omega_pairing(4, 0), pairing_error);
}

TEST_CASE("key observation: <omega_i', omega_i> = r_i s_i^-1 in every type") {
    for (const char* t : {"A2", "A3", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4"}) {
        RootSystem rs(LieType::parse(t));
        PairingTable pt(rs);
        for (int i = 0; i < rs.rank(); ++i) {
            INFO(t << " i=" << i + 1);
            CHECK(pt.omega_pairing(i, i) == pt.r_i(i) * pt.s_i(i).inv());
        }
    }
}

TEST_CASE("rule (2) inverse powers") {
    RootSystem b2(LieType::parse("B2"));
    PairingTable pt(b2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(pt.omega_pairing(i, j, 1, -1) == pt.omega_pairing(i, j).inv());
            CHECK(pt.omega_pairing(i, j, -1, -1) == pt.omega_pairing(i, j));
            CHECK(pt.omega_pairing(i, j, -1, 1) == pt.omega_pairing(i, j).inv());
        }
}

TEST_CASE("group-like pairing on the root lattice") {
    RootSystem a2(LieType::parse("A2"));
    PairingTable pt(a2);
    CHECK(pt.pair_group_like(RootVector({1, 0}), RootVector({1, 0})) == mono(1, 1, -1));
    CHECK(pt.pair_group_like(RootVector({1, 1}), RootVector({1, 0})) == CoeffExpr::var_r());
    CHECK(pt.pair_group_like(RootVector({0, 0}), RootVector({2, 1})) == CoeffExpr::one());

    // Restriction: pair_weights agrees on integral arguments.
    std::mt19937_64 rng(5);
    for (const char* t : {"A2", "B2", "C3", "D4"}) {
        RootSystem rs(LieType::parse(t));
        PairingTable p2(rs);
        std::uniform_int_distribution<int> coef(-2, 2);
        for (int k = 0; k < 25; ++k) {
            RootVector z(std::vector<long>(rs.rank())), e(std::vector<long>(rs.rank()));
            for (int i = 0; i < rs.rank(); ++i) {
                z.coeffs[i] = coef(rng);
                e.coeffs[i] = coef(rng);
            }
            CHECK(p2.pair_group_like(z, e) ==
                  p2.pair_weights(rs.weight_from_root_vector(z), rs.weight_from_root_vector(e)));
        }
    }
}

// The per-type closed forms from the injectivity lemma's proof, written
// directly as an independent oracle for hat_lambda.
namespace {

CharacterValue hat_oracle(const RootSystem& rs, const PairingTable& pt, const Weight& z) {
    const int n = rs.rank();
    const int dim = rs.espace_dim();
    auto p = rs.root_coords(z);
    CharacterValue cv;
    auto ip = [&](int j) { return inner(eps(j, dim), z); };
    switch (rs.type().family) {
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) {
                cv.on_omega.push_back(mono(1, 2 * ip(i), 2 * ip(i + 1)));
                cv.on_omega_prime.push_back(mono(1, 2 * ip(i + 1), 2 * ip(i)));
            }
            cv.on_omega.push_back(mono(1, 2 * ip(n - 1) - p[n - 1], -p[n - 1]));
            cv.on_omega_prime.push_back(mono(1, -p[n - 1], 2 * ip(n - 1) - p[n - 1]));
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) {
                cv.on_omega.push_back(mono(1, ip(i), ip(i + 1)));
                cv.on_omega_prime.push_back(mono(1, ip(i + 1), ip(i)));
            }
            cv.on_omega.push_back(mono(1, 2 * ip(n - 1) - 2 * p[n - 1], -2 * p[n - 1]));
            cv.on_omega_prime.push_back(mono(1, -2 * p[n - 1], 2 * ip(n - 1) - 2 * p[n - 1]));
            break;
        case Family::D:
            for (int i = 0; i + 1 < n; ++i) {
                cv.on_omega.push_back(mono(1, ip(i), ip(i + 1)));
                cv.on_omega_prime.push_back(mono(1, ip(i + 1), ip(i)));
            }
            cv.on_omega.push_back(
                mono(1, ip(n - 2) - 2 * p[n - 2], -ip(n - 1) - 2 * p[n - 2]));
            cv.on_omega_prime.push_back(
                mono(1, -ip(n - 1) - 2 * p[n - 2], ip(n - 2) - 2 * p[n - 2]));
            break;
        case Family::A:
            for (int i = 0; i < n; ++i) {
                cv.on_omega.push_back(mono(1, ip(i), ip(i + 1)));
                cv.on_omega_prime.push_back(mono(1, ip(i + 1), ip(i)));
            }
            break;
    }
    (void)pt;
    return cv;
}

}  // namespace

TEST_CASE("hat_lambda matches the per-type closed forms") {
    std::mt19937_64 rng(42);
    for (const char* t : {"A2", "A3", "B2", "B3", "C2", "C3", "D3", "D4"}) {
        RootSystem rs(LieType::parse(t));
        PairingTable pt(rs);
        // Fundamental weights (half-integral coordinates included) and random
        // lattice weights.
        std::vector<Weight> ws;
        for (int i = 0; i < rs.rank(); ++i) ws.push_back(rs.fundamental_weight(i));
        for (int k = 0; k < 10; ++k) ws.push_back(random_lattice_weight(rs, rng));
        for (const auto& w : ws) {
            INFO(t << " weight " << w.str());
            CHECK(pt.hat_lambda(w) == hat_oracle(rs, pt, w));
        }
    }
}

TEST_CASE("hat_lambda basics") {
    RootSystem a1(LieType::parse("A1"));
    PairingTable pt(a1);
    auto cv = pt.hat_lambda(a1.fundamental_weight(0));
    CHECK(cv.on_omega[0] == CoeffExpr::monomial(1, Rational(1, 2), Rational(-1, 2)));
    CHECK(cv.on_omega_prime[0] == CoeffExpr::monomial(1, Rational(-1, 2), Rational(1, 2)));

    RootSystem b2(LieType::parse("B2"));
    PairingTable pb(b2);
    auto z = pb.hat_lambda(Weight::zero(2));
    for (int i = 0; i < 2; ++i) {
        CHECK(z.on_omega[i] == CoeffExpr::one());
        CHECK(z.on_omega_prime[i] == CoeffExpr::one());
    }
    CHECK_THROWS_AS(pb.hat_lambda(Weight({Rational(1, 3), Rational(0)})), pairing_error);

    // Multiplicativity: hat(lambda) hat(mu) = hat(lambda + mu) componentwise.
    std::mt19937_64 rng(7);
    for (const char* t : {"B3", "C2", "D4"}) {
        RootSystem rs(LieType::parse(t));
        PairingTable p2(rs);
        for (int k = 0; k < 10; ++k) {
            Weight a = random_lattice_weight(rs, rng), b = random_lattice_weight(rs, rng);
            auto ca = p2.hat_lambda(a), cb = p2.hat_lambda(b), cab = p2.hat_lambda(a + b);
            for (int i = 0; i < rs.rank(); ++i) {
                CHECK(ca.on_omega[i] * cb.on_omega[i] == cab.on_omega[i]);
                CHECK(ca.on_omega_prime[i] * cb.on_omega_prime[i] == cab.on_omega_prime[i]);
            }
        }
    }
}

TEST_CASE("ratio identity hat(nu)(omega_i')/hat(nu)(omega_i) = (r_i/s_i)^-(nu,ai^vee)") {
    std::mt19937_64 rng(11);
    for (const char* t : {"A2", "B2", "B3", "C2", "C3", "D4"}) {
        RootSystem rs(LieType::parse(t));
        PairingTable pt(rs);
        std::uniform_int_distribution<int> coef(0, 3);
        for (int k = 0; k < 8; ++k) {
            std::vector<Rational> c;
            for (int i = 0; i < rs.rank(); ++i) c.push_back(Rational(coef(rng)));
            Weight nu = rs.weight_from_fund_coeffs(c);
            auto cv = pt.hat_lambda(nu);
            for (int i = 0; i < rs.rank(); ++i) {
                CoeffExpr lhs = cv.on_omega_prime[i] * cv.on_omega[i].inv();
                CoeffExpr rhs = (pt.r_i(i) * pt.s_i(i).inv())
                                    .mono_pow(-rs.coroot_pair(nu, i));
                INFO(t << " i=" << i + 1);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("f form") {
    RootSystem a1(LieType::parse("A1"));
    PairingTable pt(a1);
    Weight l1 = a1.fundamental_weight(0);
    CHECK(pt.f_form(l1, l1) == CoeffExpr::monomial(1, Rational(-1, 4), Rational(1, 4)));
    CHECK(pt.f_form(Weight::zero(2), l1) == CoeffExpr::one());

    std::mt19937_64 rng(23);
    for (const char* t : {"A2", "B2", "C3", "D4"}) {
        RootSystem rs(LieType::parse(t));
        PairingTable p2(rs);
        for (int k = 0; k < 10; ++k) {
            Weight a = random_lattice_weight(rs, rng);
            Weight b = random_lattice_weight(rs, rng);
            Weight c = random_lattice_weight(rs, rng);
            CHECK(p2.f_form(a + b, c) == p2.f_form(a, c) * p2.f_form(b, c));
            CHECK(p2.f_form(a, b + c) == p2.f_form(a, b) * p2.f_form(a, c));
        }
        // f(alpha_i, mu) = <omega_mu', omega_i>^-1 and f(lambda, alpha_i) =
        // <omega_i', omega_lambda>^-1.
        for (int i = 0; i < rs.rank(); ++i) {
            Weight mu = random_lattice_weight(rs, rng);
            auto cv = p2.hat_lambda(mu);
            CHECK(p2.f_form(rs.simple_root(i), mu) == cv.on_omega[i].inv());
            CHECK(p2.f_form(mu, rs.simple_root(i)) == cv.on_omega_prime[i]);
        }
    }
}

TEST_CASE("hat injectivity on finite sets") {
    RootSystem b2(LieType::parse("B2"));
    PairingTable pt(b2);
    // All lattice weights within height 4 of the dominant cone boundary.
    std::vector<Weight> ws;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            ws.push_back(b2.weight_from_fund_coeffs({Rational(a), Rational(b)}));
    CHECK(pt.hat_injectivity_check(ws));
    // Repeats are not counterexamples.
    CHECK(pt.hat_injectivity_check({ws[0], ws[0]}));

    RootSystem c2(LieType::parse("C2"));
    PairingTable pc(c2);
    std::vector<Weight> cw;
    for (const auto& [mu, m] : c2.classical_character(c2.fundamental_weight(0))) cw.push_back(mu);
    for (const auto& [mu, m] : c2.classical_character(c2.fundamental_weight(1))) cw.push_back(mu);
    CHECK(pc.hat_injectivity_check(cw));
}
