#include "hcrep/rootsys/weyl.hpp"

#include <set>

#include "hcrep/error.hpp"

namespace hcrep::rootsys {

namespace {

using Entries = std::vector<std::int16_t>;

Entries multiply(const Entries& a, const Entries& b, std::size_t n) {
    Entries c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            int x = a[i * n + k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i * n + j] = static_cast<std::int16_t>(c[i * n + j] + x * b[k * n + j]);
        }
    return c;
}

}  // namespace

WeylGroupElement WeylGroupElement::identity(std::size_t rank) {
    WeylGroupElement e;
    e.rank_ = rank;
    e.root_action_.assign(rank * rank, 0);
    for (std::size_t i = 0; i < rank; ++i) e.root_action_[i * rank + i] = 1;
    e.weight_action_ = e.root_action_;
    return e;
}

WeylGroupElement WeylGroupElement::simple_reflection(const RootSystem& rs, std::size_t i) {
    const std::size_t n = rs.rank();
    return identity(n).left_multiply_simple(rs, i);
}

WeylGroupElement WeylGroupElement::left_multiply_simple(const RootSystem& rs, std::size_t i) const {
    const std::size_t n = rank_;
    WeylGroupElement r = *this;
    r.word_.insert(r.word_.begin(), static_cast<std::uint8_t>(i));
    // s_i(alpha_k) = alpha_k - a_ik alpha_i: row i of the product picks up
    // -a_ik times row k.
    for (std::size_t k = 0; k < n; ++k) {
        int a = rs.cartan()(i, k);
        if (k == i || a == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            r.root_action_[i * n + j] =
                static_cast<std::int16_t>(r.root_action_[i * n + j] - a * root_action_[k * n + j]);
    }
    for (std::size_t j = 0; j < n; ++j)
        r.root_action_[i * n + j] =
            static_cast<std::int16_t>(r.root_action_[i * n + j] - 2 * root_action_[i * n + j]);
    // s_i(lambda)_k = lambda_k - lambda_i a_ki
    for (std::size_t k = 0; k < n; ++k) {
        int a = rs.cartan()(k, i);
        if (a == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            r.weight_action_[k * n + j] =
                static_cast<std::int16_t>(r.weight_action_[k * n + j] - a * weight_action_[i * n + j]);
    }
    return r;
}

std::vector<int> WeylGroupElement::delta_image() const {
    std::vector<int> d(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) d[i] += weight_action_[i * rank_ + j];
    return d;
}

LatticeVector WeylGroupElement::apply(const LatticeVector& v) const {
    std::vector<int> c(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) c[i] += root_action_[i * rank_ + j] * v[j];
    return LatticeVector(std::move(c));
}

Weight WeylGroupElement::apply(const Weight& lambda) const {
    std::vector<Rational> c(rank_);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j)
            if (int m = weight_action_[i * rank_ + j]; m != 0) c[i] += m * lambda[j];
    return Weight(std::move(c));
}

WeylGroupElement WeylGroupElement::operator*(const WeylGroupElement& other) const {
    WeylGroupElement r;
    r.rank_ = rank_;
    r.word_ = word_;
    r.word_.insert(r.word_.end(), other.word_.begin(), other.word_.end());
    r.root_action_ = multiply(root_action_, other.root_action_, rank_);
    r.weight_action_ = multiply(weight_action_, other.weight_action_, rank_);
    return r;
}

std::vector<WeylGroupElement> weyl_subgroup(const RootSystem& rs,
                                            const std::vector<std::size_t>& generators,
                                            const WeylOptions& opts) {
    if (rs.rank() > opts.max_rank)
        throw BoundExceeded("rank " + std::to_string(rs.rank()) + " exceeds Weyl group bound " +
                                std::to_string(opts.max_rank),
                            0);
    for (auto i : generators)
        if (i >= rs.rank()) throw InvalidInput("generator index out of range");

    // delta is regular, so w -> w(delta) is injective.
    std::vector<WeylGroupElement> elements{WeylGroupElement::identity(rs.rank())};
    std::set<std::vector<int>> seen{elements.front().delta_image()};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (auto i : generators) {
            WeylGroupElement w = elements[head].left_multiply_simple(rs, i);
            if (seen.insert(w.delta_image()).second) {
                if (elements.size() >= opts.max_order)
                    throw BoundExceeded("Weyl group order exceeds bound " +
                                            std::to_string(opts.max_order),
                                        elements.size());
                elements.push_back(std::move(w));
            }
        }
    }
    return elements;
}

std::vector<WeylGroupElement> weyl_group(const RootSystem& rs, const WeylOptions& opts) {
    std::vector<std::size_t> all(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i) all[i] = i;
    return weyl_subgroup(rs, all, opts);
}

Weight affine_dot(const WeylGroupElement& s, const Weight& lambda, const Weight& delta) {
    return s.apply(lambda + delta) - delta;
}

Weight dominant_representative(const RootSystem& rs, const Weight& lambda) {
    Weight w = lambda;
    for (;;) {
        std::size_t i = 0;
        while (i < rs.rank() && w[i] >= 0) ++i;
        if (i == rs.rank()) return w;
        w = rs.reflect(w, i);
    }
}

}  // namespace hcrep::rootsys
