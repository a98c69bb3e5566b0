#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcrep/linalg.hpp"
#include "hcrep/rational.hpp"
#include "hcrep/rootsys/cartan.hpp"

namespace hcrep::rootsys {

/// Integer vector over the simple-root basis. Roots handed out by RootSystem
/// are nonzero with all coefficients of one sign; general lattice vectors
/// (differences of weights, partition targets) use the same type.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}
    static LatticeVector zero(std::size_t rank) { return LatticeVector(std::vector<int>(rank, 0)); }
    static LatticeVector unit(std::size_t rank, std::size_t i);

    const std::vector<int>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    int operator[](std::size_t i) const { return coeffs_[i]; }

    int height() const;
    bool is_zero() const;
    bool is_nonnegative() const;  // every coefficient >= 0
    bool is_positive() const { return is_nonnegative() && !is_zero(); }

    LatticeVector operator-() const;
    LatticeVector operator+(const LatticeVector& o) const;
    LatticeVector operator-(const LatticeVector& o) const;
    LatticeVector operator*(int k) const;
    LatticeVector& operator+=(const LatticeVector& o);
    LatticeVector& operator-=(const LatticeVector& o);

    auto operator<=>(const LatticeVector&) const = default;

    /// "a+2b", "-a-b", "0"; letters name the simple roots.
    std::string label() const;

private:
    std::vector<int> coeffs_;
};

using Root = LatticeVector;

/// Weight in fundamental-weight coordinates: coords[i] = lambda(H_{alpha_i}).
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    static Weight zero(std::size_t rank) { return Weight(std::vector<Rational>(rank)); }
    static Weight from_ints(const std::vector<long>& c);

    const std::vector<Rational>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    bool is_integral() const;
    bool is_zero() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(const Rational& k) const;

    bool operator==(const Weight& o) const { return coords_ == o.coords_; }
    bool operator<(const Weight& o) const { return coords_ < o.coords_; }

    /// "1,-1/2"
    std::string to_string() const;

private:
    std::vector<Rational> coords_;
};

/// Finite root system built from a Cartan matrix. Immutable after
/// construction.
class RootSystem {
public:
    explicit RootSystem(CartanMatrix cartan);

    const CartanMatrix& cartan() const { return cartan_; }
    std::size_t rank() const { return cartan_.rank(); }
    const std::vector<int>& symmetrizer() const { return cartan_.symmetrizer(); }

    /// <alpha_i, alpha_j> = d_i a_ij
    int form(std::size_t i, std::size_t j) const { return gram_[i][j]; }

    /// All roots sorted by height, ties broken lexicographically.
    const std::vector<Root>& roots() const { return roots_; }
    /// Positive roots in the same order.
    const std::vector<Root>& positive_roots() const { return positive_; }
    Root simple_root(std::size_t i) const { return LatticeVector::unit(rank(), i); }

    bool is_root(const LatticeVector& v) const { return index_.count(v) != 0; }
    /// Position in roots(); nullopt if v is not a root.
    std::optional<std::size_t> index_of(const LatticeVector& v) const;

    /// Half-sum of the standard positive roots; coordinates are all 1.
    Weight delta() const;

    long inner(const LatticeVector& a, const LatticeVector& b) const;
    Rational inner(const Weight& a, const Weight& b) const;

    /// beta(H_gamma) = 2<beta,gamma>/<gamma,gamma>; gamma must be a root.
    int pairing(const LatticeVector& beta, const Root& gamma) const;
    /// lambda(H_gamma) by expanding the coroot of gamma in simple coroots.
    Rational pairing(const Weight& lambda, const Root& gamma) const;

    Weight to_weight(const LatticeVector& v) const;
    /// Rational coordinates of lambda over the simple roots.
    std::vector<Rational> root_coordinates(const Weight& lambda) const;
    /// Lattice vector equal to lambda, if lambda lies in the root lattice.
    std::optional<LatticeVector> to_lattice(const Weight& lambda) const;

    Root reflect(const LatticeVector& v, std::size_t i) const;
    Weight reflect(const Weight& lambda, std::size_t i) const;

    /// Dynkin component containing the support of a nonzero root.
    std::size_t component_of(const Root& r) const;

    bool operator==(const RootSystem& o) const { return cartan_ == o.cartan_; }

private:
    CartanMatrix cartan_;
    std::vector<std::vector<int>> gram_;
    RationalMatrix cartan_inverse_;
    std::vector<Root> roots_;
    std::vector<Root> positive_;
    std::map<LatticeVector, std::size_t> index_;
};

/// Builds the full root system by closing the simple roots under simple
/// reflections. Throws InvalidInput for an invalid Cartan matrix.
RootSystem build_root_system(const CartanMatrix& cm);

/// lambda(H_gamma). Throws InvalidInput if gamma is not a root.
Rational coroot_pairing(const RootSystem& rs, const Weight& lambda, const Root& gamma);

}  // namespace hcrep::rootsys
