#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "hcrep/rootsys/positive_system.hpp"
#include "hcrep/rootsys/root_system.hpp"
#include "hcrep/verdict.hpp"

namespace hcrep::hcpair {

using rootsys::LatticeVector;
using rootsys::PositiveSystem;
using rootsys::Root;
using rootsys::RootSystem;
using rootsys::Weight;

/// Equal-rank pair given by a marking of simple roots: a root is noncompact
/// iff the sum of its coefficients on the marked simple roots is odd.
class HCPairSpec {
public:
    /// marks are 0-based simple-root indices. Throws InvalidInput for an empty
    /// or out-of-range marking.
    HCPairSpec(RootSystem rs, std::vector<std::size_t> marks);

    const RootSystem& rs() const { return rs_; }
    const std::vector<std::size_t>& marks() const { return marks_; }

    bool is_noncompact(const LatticeVector& v) const;
    bool is_compact(const LatticeVector& v) const { return !is_noncompact(v); }

    /// Enumeration order.
    const std::vector<Root>& compact_roots() const { return compact_; }
    const std::vector<Root>& noncompact_roots() const { return noncompact_; }

    /// Connected components of the graph on noncompact roots with edges
    /// gamma ~ gamma + alpha (alpha compact): the root sets of the irreducible
    /// k-submodules of p. Each component is in enumeration order; components
    /// are ordered by their first root.
    const std::vector<std::vector<Root>>& ladder_components() const { return ladders_; }
    std::size_t ladder_of(const Root& noncompact) const;

    /// Dimension of the center of k: rank minus the rank of the compact roots.
    std::size_t center_dimension() const { return center_dim_; }

    /// Dynkin components whose noncompact roots split into two opposite
    /// ladder components (p = p+ + p-).
    const std::vector<std::size_t>& hermitian_components() const { return hermitian_; }
    /// Dynkin components with noncompact roots forming a single ladder.
    const std::vector<std::size_t>& nonhermitian_components() const { return nonhermitian_; }

    /// Dynkin components carrying more than one mark. The parity model still
    /// applies; these inputs are reported so callers can treat them with care.
    const std::vector<std::size_t>& multi_mark_components() const { return multi_mark_; }

    /// P intersected with the compact roots, as a positive system of them.
    PositiveSystem compact_part(const PositiveSystem& p) const;
    /// The standard positive roots that are compact.
    PositiveSystem standard_compact() const;

private:
    RootSystem rs_;
    std::vector<std::size_t> marks_;
    std::vector<Root> compact_, noncompact_;
    std::vector<std::vector<Root>> ladders_;
    std::vector<std::size_t> ladder_index_;  // by rs index
    std::size_t center_dim_ = 0;
    std::vector<std::size_t> hermitian_, nonhermitian_, multi_mark_;
};

HCPairSpec build_pair(const RootSystem& rs, const std::vector<std::size_t>& marks);

/// Union of the ladder components contained in P: the largest subset of P_n
/// spanning a k-stable subspace.
std::vector<Root> totally_positive_roots(const HCPairSpec& pair, const PositiveSystem& p);

bool is_admissible(const HCPairSpec& pair, const PositiveSystem& p);

struct AdmissibleSystemReport {
    std::vector<Root> positive_system;
    std::vector<Root> totally_positive;               // P_t
    std::vector<std::size_t> gt_components;           // Dynkin components of g_t
    std::vector<std::size_t> g1_components;
    std::vector<Root> gt_roots, g1_roots;             // all roots, split
    std::vector<Root> compact_simple;                 // simple roots of P_k inside g_t
    std::vector<std::vector<Root>> summands;          // irreducible pieces of p+_t
    std::vector<Root> lowest_roots;                   // beta_i, one per summand
    std::size_t center_dim_s = 0;                     // = summands.size()
    std::size_t gt_rank = 0;
    bool admissible = false;
};

AdmissibleSystemReport ideal_decomposition(const HCPairSpec& pair, const PositiveSystem& p);

/// Structure checks on g_t: rank count r + s, simple roots of P, independence
/// of the beta_i modulo compact roots, unique noncompact decomposition, the
/// center values, [p+,p+] = 0, and P_t = noncompact positive roots of g_t.
/// Throws InvalidInput when the report is not admissible.
Verdict verify_theorem3(const HCPairSpec& pair, const AdmissibleSystemReport& report);

/// True if every Hermitian simple ideal meets P_t, i.e. g_t is as large as
/// the marking allows (g = g_t when there are no other noncompact factors).
bool is_fully_admissible(const HCPairSpec& pair, const PositiveSystem& p);

/// The positive systems P^eps containing pk (a positive system of the compact
/// roots), one per sign vector eps over the s Hermitian ideals, so 2^s of them
/// when every noncompact factor is Hermitian. A non-Hermitian factor multiplies
/// the count by its number of positive systems containing pk. Sorted; empty
/// when k has trivial center. Each result is fully admissible.
std::vector<PositiveSystem> enumerate_admissible(const HCPairSpec& pair, const PositiveSystem& pk);

/// Oracle for enumerate_admissible: every positive system containing pk,
/// filtered by is_fully_admissible.
std::vector<PositiveSystem> brute_force_admissible(const HCPairSpec& pair, const PositiveSystem& pk);

/// Every positive system containing pk with P_t nonempty. On products this
/// can exceed 2^s: a factor may sit in g_1 while another carries P_t.
std::vector<PositiveSystem> admissible_containing(const HCPairSpec& pair, const PositiveSystem& pk);

/// For every gamma in pt and every compact alpha, the alpha-string through
/// gamma has at most 3 roots.
Verdict chain_length_check(const HCPairSpec& pair, const std::vector<Root>& pt);

}  // namespace hcrep::hcpair
