#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hcrep/rootsys/root_system.hpp"

namespace hcrep::rootsys {

/// Element of the Weyl group. word = (i1, ..., ik) denotes s_{i1} ... s_{ik},
/// acting right to left. Both integer action matrices are stored row-major:
/// root_action on simple-root coordinates, weight_action on fundamental
/// coordinates.
class WeylGroupElement {
public:
    static WeylGroupElement identity(std::size_t rank);
    static WeylGroupElement simple_reflection(const RootSystem& rs, std::size_t i);

    std::vector<std::size_t> word() const { return {word_.begin(), word_.end()}; }
    std::size_t length() const { return word_.size(); }
    std::size_t rank() const { return rank_; }

    int root_matrix(std::size_t i, std::size_t j) const { return root_action_[i * rank_ + j]; }
    int weight_matrix(std::size_t i, std::size_t j) const { return weight_action_[i * rank_ + j]; }

    LatticeVector apply(const LatticeVector& v) const;
    Weight apply(const Weight& lambda) const;

    /// this * other
    WeylGroupElement operator*(const WeylGroupElement& other) const;
    /// s_i * this, cheaper than a general product.
    WeylGroupElement left_multiply_simple(const RootSystem& rs, std::size_t i) const;
    /// Image of delta (all coordinates 1) under the weight action; injective on W.
    std::vector<int> delta_image() const;
    bool operator==(const WeylGroupElement& o) const { return root_action_ == o.root_action_; }

private:
    std::size_t rank_ = 0;
    // Compact storage: the group may be materialized up to 10^6 elements.
    std::vector<std::uint8_t> word_;
    std::vector<std::int16_t> root_action_;
    std::vector<std::int16_t> weight_action_;
};

struct WeylOptions {
    std::size_t max_rank = 7;
    std::size_t max_order = 1'000'000;
};

/// Full Weyl group by closure of the simple reflections; identity first, then
/// breadth-first (shortest words). Throws BoundExceeded (with the partial
/// count) when the rank or order bound is hit.
std::vector<WeylGroupElement> weyl_group(const RootSystem& rs, const WeylOptions& opts = {});

/// Subgroup generated by the given simple reflections.
std::vector<WeylGroupElement> weyl_subgroup(const RootSystem& rs,
                                            const std::vector<std::size_t>& generators,
                                            const WeylOptions& opts = {});

/// s(lambda + delta) - delta
Weight affine_dot(const WeylGroupElement& s, const Weight& lambda, const Weight& delta);

/// Unique dominant element in the W-orbit of lambda (all coordinates >= 0),
/// found by repeated simple reflections; works for rational weights.
Weight dominant_representative(const RootSystem& rs, const Weight& lambda);

}  // namespace hcrep::rootsys
