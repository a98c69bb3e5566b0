#pragma once

#include <map>
#include <memory>
#include <vector>

#include "hcrep/hcpair/pair.hpp"
#include "hcrep/hwmod/finite_module.hpp"
#include "hcrep/hwmod/partition.hpp"

namespace hcrep::hwmod {

using hcpair::HCPairSpec;

struct UModuleQuery {
    const HCPairSpec* pair;
    PositiveSystem p;
    Weight lambda;
    Weight mu;
};

/// The module U(g) (x)_{U(k + p+)} F_lambda realized as U(p-) (x) F_lambda,
/// with p+ spanned by the totally positive roots of an admissible P.
class UModule {
public:
    /// Throws InvalidInput when P is not admissible or lambda is not dominant
    /// integral for P_k.
    UModule(const HCPairSpec& pair, PositiveSystem p, Weight lambda);

    const FiniteModuleTable& finite_part() const { return f_; }
    const std::vector<Root>& generators() const { return pt_; }
    const PositiveSystem& positive_system() const { return p_; }
    const Weight& highest_weight() const { return lambda_; }
    /// True when p- = span of -P_t is all of the noncompact negative part, so
    /// that g = p- + k + p+.
    bool covers_p() const { return covers_p_; }

    /// Height of lambda - mu with respect to P; nullopt if lambda - mu is not
    /// in the root lattice.
    std::optional<long> depth(const Weight& mu) const;

    /// sum_i k_i N(lambda_i - mu).
    BigInt multiplicity(const Weight& mu) const;
    /// The literal alternative sum_i k_i N(mu - lambda_i), kept for reporting.
    BigInt multiplicity_printed_convention(const Weight& mu) const;

    /// Oracle: tally weights of PBW monomials in the -P_t root vectors of
    /// total P-height <= depth times the weights of F_lambda.
    std::map<Weight, BigInt> brute_force(long depth) const;

    /// Every weight mu with lambda - mu a nonnegative combination of the
    /// simple roots of P and P-height <= depth.
    std::vector<Weight> weights_within(long depth) const;

private:
    const HCPairSpec* pair_;
    PositiveSystem p_;
    Weight lambda_;
    FiniteModuleTable f_;
    std::vector<Root> pt_;
    std::vector<long> height_;
    std::unique_ptr<PartitionFunctionCache> cache_;
    bool covers_p_ = true;
};

BigInt u_module_multiplicity(const UModuleQuery& q);
std::map<Weight, BigInt> brute_force_u_module(const UModuleQuery& q, long depth);

struct OracleComparison {
    std::size_t weights_checked = 0;
    std::vector<std::string> mismatches;
    bool agree() const { return mismatches.empty(); }
};

/// Compares multiplicity() with brute_force() on every weight of depth <= depth.
OracleComparison compare_with_oracle(const UModule& m, long depth);

}  // namespace hcrep::hwmod
