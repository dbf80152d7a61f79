#pragma once

#include <utility>
#include <vector>

#include "qortho/coeff.hpp"
#include "qortho/rootdata.hpp"

namespace qortho {

struct pairing_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Values of an algebra homomorphism U^0 -> K on the omega and omega'
/// generators; always monomials in r, s.
struct CharacterValue {
    std::vector<CoeffExpr> on_omega;
    std::vector<CoeffExpr> on_omega_prime;
    bool operator==(const CharacterValue&) const = default;
};

/// The Hopf skew-dual pairing on group-like generators: the per-type tables
/// give <omega_i', omega_j> = r^a s^b, extended multiplicatively to the root
/// lattice and, through root coordinates, to the weight lattice.
class PairingTable {
  public:
    explicit PairingTable(const RootSystem& rs);

    const RootSystem& roots() const { return rs_; }

    /// <omega_i', omega_j> (0-based indices).
    CoeffExpr omega_pairing(int i, int j) const;
    /// <omega_i'^pi, omega_j^pj> per rule (2).
    CoeffExpr omega_pairing(int i, int j, long pi, long pj) const;
    /// Exponent pair (a, b) with <omega_i', omega_j> = r^a s^b.
    const std::pair<Rational, Rational>& omega_exps(int i, int j) const;

    /// <omega_zeta', omega_eta> on the root lattice.
    CoeffExpr pair_group_like(const RootVector& zeta, const RootVector& eta) const;
    /// <omega_lambda', omega_mu> extended bilinearly over root coordinates.
    CoeffExpr pair_weights(const Weight& lambda, const Weight& mu) const;

    /// The weight character: hat(lambda)(omega_i) = <omega_lambda', omega_i>,
    /// hat(lambda)(omega_i') = <omega_i', omega_lambda>^(-1).
    CharacterValue hat_lambda(const Weight& lambda) const;

    /// f(lambda, mu) = <omega_mu', omega_lambda>^(-1).
    CoeffExpr f_form(const Weight& lambda, const Weight& mu) const;

    /// True iff hat is injective on the given finite weight set.
    bool hat_injectivity_check(const std::vector<Weight>& weights) const;

    /// r_i = r^{d_i}, s_i = s^{d_i}.
    CoeffExpr r_i(int i) const;
    CoeffExpr s_i(int i) const;

  private:
    const RootSystem& rs_;
    std::vector<std::vector<std::pair<Rational, Rational>>> exps_;
    std::vector<Rational> checked_root_coords(const Weight& w) const;
};

}  // namespace qortho
