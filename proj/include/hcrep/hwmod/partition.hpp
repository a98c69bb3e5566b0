#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "hcrep/rational.hpp"
#include "hcrep/rootsys/positive_system.hpp"

namespace hcrep::hwmod {

using rootsys::LatticeVector;
using rootsys::Root;

/// Vector partition function N(nu) = #{m >= 0 : nu = sum_j m_j gamma_j} for a
/// fixed list of generators, memoized. `height` is an integral linear
/// functional (over the simple-root coordinates) that is positive on every
/// generator; it bounds the recursion. Queries are serialized by an internal
/// mutex, so one cache may be shared between threads.
class PartitionFunctionCache {
public:
    PartitionFunctionCache(std::vector<Root> generators, std::vector<long> height);
    /// Uses the height functional of p; every generator must lie in p.
    PartitionFunctionCache(std::vector<Root> generators, const rootsys::PositiveSystem& p);

    const std::vector<Root>& generators() const { return generators_; }
    long height(const LatticeVector& v) const;

    BigInt count(const LatticeVector& nu);
    std::size_t memo_size() const;

private:
    BigInt count_locked(const LatticeVector& nu, std::size_t k);

    std::vector<Root> generators_;
    std::vector<long> height_;
    std::map<std::pair<LatticeVector, std::size_t>, BigInt> memo_;
    mutable std::mutex mutex_;
};

BigInt vector_partition(PartitionFunctionCache& cache, const LatticeVector& nu);

/// Oracle: enumerate every exponent tuple directly.
BigInt exhaustive_partition_count(const std::vector<Root>& generators, const std::vector<long>& height,
                                  const LatticeVector& nu);

/// Integral height functional of a positive system of the full root system.
std::vector<long> integral_height(const rootsys::PositiveSystem& p);

}  // namespace hcrep::hwmod
