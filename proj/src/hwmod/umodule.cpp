#include "hcrep/hwmod/umodule.hpp"

#include <set>

#include "hcrep/error.hpp"

namespace hcrep::hwmod {

UModule::UModule(const HCPairSpec& pair, PositiveSystem p, Weight lambda)
    : pair_(&pair), p_(std::move(p)), lambda_(std::move(lambda)) {
    const auto& rs = pair.rs();
    if (lambda_.size() != rs.rank()) throw InvalidInput("weight has wrong rank");
    pt_ = hcpair::totally_positive_roots(pair, p_);
    if (pt_.empty()) throw InvalidInput("positive system is not admissible");
    PositiveSystem pk = pair.compact_part(p_);
    f_ = freudenthal_multiplicities(rs, pk, lambda_);
    height_ = integral_height(p_);
    cache_ = std::make_unique<PartitionFunctionCache>(pt_, height_);
    for (const auto& g : p_.roots())
        if (pair.is_noncompact(g) && std::find(pt_.begin(), pt_.end(), g) == pt_.end()) covers_p_ = false;
}

std::optional<long> UModule::depth(const Weight& mu) const {
    auto nu = pair_->rs().to_lattice(lambda_ - mu);
    if (!nu) return std::nullopt;
    long h = 0;
    for (std::size_t i = 0; i < height_.size(); ++i) h += height_[i] * (*nu)[i];
    return h;
}

BigInt UModule::multiplicity(const Weight& mu) const {
    if (mu.size() != lambda_.size()) throw InvalidInput("weight has wrong rank");
    BigInt total = 0;
    for (const auto& w : f_.weights) {
        auto nu = pair_->rs().to_lattice(w.weight - mu);
        if (nu) total += w.multiplicity * cache_->count(*nu);
    }
    return total;
}

BigInt UModule::multiplicity_printed_convention(const Weight& mu) const {
    BigInt total = 0;
    for (const auto& w : f_.weights) {
        auto nu = pair_->rs().to_lattice(mu - w.weight);
        if (nu) total += w.multiplicity * cache_->count(*nu);
    }
    return total;
}

std::map<Weight, BigInt> UModule::brute_force(long depth) const {
    const auto& rs = pair_->rs();
    std::vector<long> step;
    for (const auto& g : pt_) {
        long h = 0;
        for (std::size_t i = 0; i < height_.size(); ++i) h += height_[i] * g[i];
        step.push_back(h);
    }
    // All PBW monomials prod X_{-gamma_j}^{m_j} with sum m_j ht(gamma_j) <= depth.
    std::vector<LatticeVector> monomial_weights;
    std::vector<int> m(pt_.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, long budget, const LatticeVector& acc) -> void {
        if (k == pt_.size()) {
            monomial_weights.push_back(acc);
            return;
        }
        LatticeVector cur = acc;
        for (long used = 0; used <= budget; used += step[k]) {
            self(self, k + 1, budget - used, cur);
            cur += pt_[k];
        }
    };
    rec(rec, 0, depth, LatticeVector::zero(rs.rank()));

    std::map<Weight, BigInt> table;
    for (const auto& w : f_.weights)
        for (const auto& mw : monomial_weights) table[w.weight - rs.to_weight(mw)] += w.multiplicity;
    return table;
}

std::vector<Weight> UModule::weights_within(long depth) const {
    const auto& rs = pair_->rs();
    const auto& simple = p_.simple_roots();
    std::vector<Weight> out;
    auto rec = [&](auto&& self, std::size_t k, long budget, const LatticeVector& acc) -> void {
        if (k == simple.size()) {
            out.push_back(lambda_ - rs.to_weight(acc));
            return;
        }
        LatticeVector cur = acc;
        for (long used = 0; used <= budget; ++used) {
            self(self, k + 1, budget - used, cur);
            cur += simple[k];
        }
    };
    rec(rec, 0, depth, LatticeVector::zero(rs.rank()));
    return out;
}

BigInt u_module_multiplicity(const UModuleQuery& q) { return UModule(*q.pair, q.p, q.lambda).multiplicity(q.mu); }

std::map<Weight, BigInt> brute_force_u_module(const UModuleQuery& q, long depth) {
    return UModule(*q.pair, q.p, q.lambda).brute_force(depth);
}

OracleComparison compare_with_oracle(const UModule& m, long depth) {
    OracleComparison out;
    auto oracle = m.brute_force(depth);
    std::set<Weight> checked;
    auto check = [&](const Weight& mu) {
        if (!checked.insert(mu).second) return;
        auto d = m.depth(mu);
        if (!d || *d > depth) return;
        ++out.weights_checked;
        auto it = oracle.find(mu);
        BigInt expect = it == oracle.end() ? BigInt(0) : it->second;
        BigInt got = m.multiplicity(mu);
        if (got != expect)
            out.mismatches.push_back("mu=(" + mu.to_string() + "): formula " + got.get_str() + ", oracle " +
                                     expect.get_str());
    };
    for (const auto& [mu, unused] : oracle) check(mu);
    for (const auto& mu : m.weights_within(depth)) check(mu);
    return out;
}

}  // namespace hcrep::hwmod
