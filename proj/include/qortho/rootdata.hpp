#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qortho/rational.hpp"

namespace qortho {

struct rootdata_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

struct LieType {
    Family family;
    int rank;

    /// Parses "A2", "B3", "C2", "D4".
    static LieType parse(const std::string& text);
    std::string str() const;
    bool operator==(const LieType&) const = default;
};

/// Vector in the epsilon-coordinate Euclidean space (dimension rank, or
/// rank+1 for type A where the gl-style lift is used).
struct Weight {
    std::vector<Rational> coords;

    Weight() = default;
    explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
    static Weight zero(int dim) { return Weight(std::vector<Rational>(dim, Rational(0))); }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(const Rational& c) const;
    bool operator==(const Weight& o) const { return coords == o.coords; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const;  // lex, for ordered containers
    bool is_zero() const;

    std::string str() const;
};

/// Standard inner product in epsilon coordinates.
Rational inner(const Weight& x, const Weight& y);

/// Element of the root lattice Q in simple-root coordinates.
struct RootVector {
    std::vector<long> coeffs;

    RootVector() = default;
    explicit RootVector(std::vector<long> c) : coeffs(std::move(c)) {}
    static RootVector zero(int rank) { return RootVector(std::vector<long>(rank, 0)); }

    long height() const;
    bool is_nonnegative() const;
    bool is_zero() const;
    RootVector operator+(const RootVector& o) const;
    /// Componentwise subtraction; nullopt when any coefficient would go negative.
    std::optional<RootVector> minus(const RootVector& o) const;
    bool operator==(const RootVector&) const = default;
    bool operator<(const RootVector& o) const { return coeffs < o.coeffs; }

    std::string str() const;
};

/// A Weyl group element as an orthogonal matrix on epsilon coordinates.
struct WeylElem {
    std::vector<std::vector<Rational>> mat;  // row-major, dim x dim
    Weight apply(const Weight& w) const;
    bool operator<(const WeylElem& o) const { return mat < o.mat; }
    bool operator==(const WeylElem&) const = default;
};

/// Root-system data for one classical type, plus the classical combinatorial
/// oracles (Kostant partition counts, Weyl dimension, Freudenthal character)
/// used to cross-check the quantum constructions.
class RootSystem {
  public:
    explicit RootSystem(LieType t);

    const LieType& type() const { return type_; }
    int rank() const { return type_.rank; }
    int espace_dim() const { return espace_; }

    const std::vector<Weight>& simple_roots() const { return simple_; }
    const std::vector<Weight>& positive_roots() const { return positive_; }
    const Weight& simple_root(int i) const { return simple_.at(i); }
    const Weight& fundamental_weight(int i) const { return fund_.at(i); }
    const Weight& rho() const { return rho_; }
    const std::vector<std::vector<long>>& cartan() const { return cartan_; }
    /// d_i with r_i = r^{d_i}: (alpha_i,alpha_i) for type B, half that otherwise.
    const Rational& d_exp(int i) const { return dexp_.at(i); }

    /// 2(x, alpha_i)/(alpha_i, alpha_i).
    Rational coroot_pair(const Weight& x, int i) const;

    Weight weight_from_fund_coeffs(const std::vector<Rational>& c) const;
    Weight weight_from_root_vector(const RootVector& z) const;
    /// Coefficients of w over the simple roots. For type A, where the lifted
    /// weights live outside the root span, these are the partial sums of the
    /// epsilon coordinates (the gl-style convention).
    std::vector<Rational> root_coords(const Weight& w) const;
    /// Root-lattice elements only (integer coefficients).
    std::optional<RootVector> to_root_vector(const Weight& w) const;

    bool in_weight_lattice(const Weight& w) const;
    bool is_dominant(const Weight& w) const;
    bool is_dominant_integral(const Weight& w) const;

    /// Verifies the compatibility identities between epsilon-products of
    /// adjacent roots that make the pairing tables consistent.
    bool lemma11_check() const;

    // --- Weyl group (full enumeration capped at rank 4) ---
    const std::vector<WeylElem>& weyl_group() const;
    WeylElem simple_reflection(int i) const;
    std::vector<Weight> weyl_orbit(const Weight& w) const;
    /// w(lambda + rho) - rho.
    Weight lambda_w(const Weight& lambda, const WeylElem& w) const;
    /// The dominant representative of the Weyl orbit.
    Weight dominant_rep(const Weight& w) const;
    /// Longest-element image, computed as -dominant_rep(-lambda).
    Weight lowest_weight(const Weight& lambda) const;

    // --- classical oracles ---
    long long kostant_partitions(const RootVector& z) const;
    long long weyl_dim(const Weight& lambda) const;
    std::map<Weight, long long> classical_character(const Weight& lambda) const;

  private:
    LieType type_;
    int espace_;
    Weight weight_from_coords(const std::vector<Rational>& p) const;
    std::vector<Weight> simple_;
    std::vector<Weight> positive_;
    std::vector<Weight> fund_;
    Weight rho_;
    std::vector<std::vector<long>> cartan_;
    std::vector<Rational> dexp_;
    std::vector<RootVector> positive_rv_;

    mutable std::vector<WeylElem> weyl_;  // built on demand
    mutable std::map<RootVector, long long> kostant_memo_;
};

}  // namespace qortho
