#pragma once

#include <vector>

#include "hcrep/hcpair/pair.hpp"
#include "hcrep/rootsys/weyl.hpp"
#include "hcrep/verdict.hpp"

namespace hcrep::hwmod {

using hcpair::HCPairSpec;
using rootsys::PositiveSystem;
using rootsys::RootSystem;
using rootsys::Weight;

/// (lambda + delta_P)(H_gamma) <= 0 for every noncompact gamma in P, which
/// suffices for U^lambda to be irreducible. Preconditions: P admissible,
/// lambda dominant integral for P_k.
Verdict irreducibility_sufficient(const HCPairSpec& pair, const PositiveSystem& p, const Weight& lambda);

/// Verma module irreducibility: (lambda + delta_P)(H_gamma) is not a positive
/// integer for any gamma in P. Holds = irreducible.
Verdict duflo_criterion(const RootSystem& rs, const PositiveSystem& p, const Weight& lambda);

/// lambda(H_gamma) >= 0 for compact gamma in P and <= 0 for noncompact gamma
/// in P.
Verdict unitarity_necessary(const HCPairSpec& pair, const PositiveSystem& p, const Weight& lambda);

/// Scans integral lambda with |lambda_i| <= box that are dominant for all of P
/// and pass unitarity_necessary; holds iff lambda = 0 is the only survivor.
Verdict trivial_unitary_scan(const HCPairSpec& pair, const PositiveSystem& p, int box);

struct OrbitMatch {
    bool equal = false;
    std::vector<std::size_t> word;  // s with s(lambda + delta) = mu + delta
};

/// Whether mu lies in the dot orbit of lambda (standard delta). Throws
/// BoundExceeded when W cannot be materialized.
OrbitMatch infinitesimal_character_equal(const RootSystem& rs, const Weight& lambda, const Weight& mu);
/// Same, with a precomputed Weyl group.
OrbitMatch infinitesimal_character_equal(const RootSystem& rs, const std::vector<rootsys::WeylGroupElement>& w,
                                         const Weight& lambda, const Weight& mu);

}  // namespace hcrep::hwmod
