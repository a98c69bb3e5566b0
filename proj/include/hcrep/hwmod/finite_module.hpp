#pragma once

#include <vector>

#include "hcrep/rational.hpp"
#include "hcrep/rootsys/positive_system.hpp"

namespace hcrep::hwmod {

using rootsys::LatticeVector;
using rootsys::PositiveSystem;
using rootsys::Root;
using rootsys::RootSystem;
using rootsys::Weight;

struct WeightMultiplicity {
    Weight weight;
    LatticeVector depth;  // highest weight minus weight, over the simple roots
    BigInt multiplicity;
};

/// Weights of an irreducible finite-dimensional module, highest first, then by
/// increasing depth.
struct FiniteModuleTable {
    Weight highest_weight;
    std::vector<WeightMultiplicity> weights;
    BigInt dimension() const;
    BigInt multiplicity(const Weight& mu) const;
};

/// lambda(H_alpha) in Z>=0 for every alpha in pk.
bool is_dominant_integral(const RootSystem& rs, const PositiveSystem& pk, const Weight& lambda);

/// Freudenthal's recursion for the subsystem with positive roots pk (e.g. the
/// compact roots of a pair, or the full system), using the invariant form of
/// rs and rho = half-sum of pk. Throws InvalidInput unless lambda is dominant
/// integral for pk.
FiniteModuleTable freudenthal_multiplicities(const RootSystem& rs, const PositiveSystem& pk, const Weight& lambda);

/// prod_{alpha in pk} (lambda + rho, alpha) / (rho, alpha).
BigInt weyl_dimension(const RootSystem& rs, const PositiveSystem& pk, const Weight& lambda);

}  // namespace hcrep::hwmod
