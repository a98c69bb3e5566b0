#pragma once

#include <set>
#include <vector>

#include "hcrep/rootsys/root_system.hpp"

namespace hcrep::rootsys {

/// A positive system of a closed root subsystem (the full system, or e.g. the
/// compact roots of a pair). `ambient` lists the roots of the subsystem;
/// `roots` is the chosen half. Roots are kept in enumeration order.
class PositiveSystem {
public:
    /// Validates: for every ambient root exactly one of +-gamma is chosen, and
    /// the choice is closed under addition within the ambient set. Throws
    /// InvalidInput otherwise.
    PositiveSystem(const RootSystem& rs, std::vector<Root> ambient, std::vector<Root> roots);

    /// The standard positive roots of rs.
    static PositiveSystem standard(const RootSystem& rs);
    /// A positive system of the full root system given by its roots.
    static PositiveSystem of_full(const RootSystem& rs, std::vector<Root> roots);

    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<Root>& ambient() const { return ambient_; }
    std::size_t size() const { return roots_.size(); }
    bool contains(const Root& r) const { return members_.count(r) != 0; }
    bool contains_all(const std::vector<Root>& rs) const;

    /// Indecomposable elements, in enumeration order.
    const std::vector<Root>& simple_roots() const { return simple_; }

    /// Half-sum of the roots, as a weight.
    const Weight& half_sum() const { return half_sum_; }

    /// Integer coordinates of v over simple_roots(); v must lie in their span
    /// (throws InvalidInput otherwise).
    std::vector<Rational> simple_coordinates(const LatticeVector& v) const;

    /// Sum of simple_coordinates; positive on every root of the system.
    Rational height(const LatticeVector& v) const;

    /// Row vector f over the standard simple roots with f(v) = height(v) for
    /// every v in the span of the system.
    std::vector<Rational> height_functional() const;

    bool operator==(const PositiveSystem& o) const { return roots_ == o.roots_; }
    bool operator<(const PositiveSystem& o) const { return roots_ < o.roots_; }

private:
    std::vector<Root> ambient_;
    std::vector<Root> roots_;
    std::set<Root> members_;
    std::vector<Root> simple_;
    RationalMatrix simple_pinv_;  // left inverse of the simple-root matrix
    Weight half_sum_;
};

/// True if `roots` is a positive system of the closed subsystem `ambient`.
bool is_positive_system(const std::vector<Root>& ambient, const std::vector<Root>& roots);

/// All positive systems of the full system, one per Weyl group element.
std::vector<PositiveSystem> all_positive_systems(const RootSystem& rs);

}  // namespace hcrep::rootsys
