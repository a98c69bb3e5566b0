#include "hcrep/hwmod/partition.hpp"

#include "hcrep/error.hpp"

namespace hcrep::hwmod {

std::vector<long> integral_height(const rootsys::PositiveSystem& p) {
    std::vector<long> h;
    for (const auto& c : p.height_functional()) {
        if (!is_integer(c)) throw InvalidInput("positive system does not span the root lattice");
        h.push_back(to_long(c));
    }
    return h;
}

PartitionFunctionCache::PartitionFunctionCache(std::vector<Root> generators, std::vector<long> height)
    : generators_(std::move(generators)), height_(std::move(height)) {
    for (const auto& g : generators_) {
        if (g.size() != height_.size()) throw InvalidInput("generator has wrong rank");
        if (this->height(g) <= 0)
            throw InvalidInput("height functional is not positive on generator " + g.label());
    }
}

PartitionFunctionCache::PartitionFunctionCache(std::vector<Root> generators, const rootsys::PositiveSystem& p)
    : PartitionFunctionCache(std::move(generators), integral_height(p)) {}

long PartitionFunctionCache::height(const LatticeVector& v) const {
    long h = 0;
    for (std::size_t i = 0; i < v.size(); ++i) h += height_[i] * v[i];
    return h;
}

BigInt PartitionFunctionCache::count(const LatticeVector& nu) {
    if (nu.size() != height_.size()) throw InvalidInput("vector has wrong rank");
    std::lock_guard lock(mutex_);
    return count_locked(nu, 0);
}

std::size_t PartitionFunctionCache::memo_size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
}

// N_k(nu): partitions using generators k, k+1, ...
// N_k(nu) = N_{k+1}(nu) + N_k(nu - gamma_k).
BigInt PartitionFunctionCache::count_locked(const LatticeVector& nu, std::size_t k) {
    if (nu.is_zero()) return 1;
    if (k == generators_.size() || height(nu) <= 0) return 0;
    auto key = std::make_pair(nu, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt n = count_locked(nu, k + 1) + count_locked(nu - generators_[k], k);
    memo_.emplace(std::move(key), n);
    return n;
}

BigInt vector_partition(PartitionFunctionCache& cache, const LatticeVector& nu) { return cache.count(nu); }

namespace {

void enumerate(const std::vector<Root>& gens, const std::vector<long>& h, std::size_t k, LatticeVector rest,
               long budget, BigInt& count) {
    if (k == gens.size()) {
        if (rest.is_zero()) ++count;
        return;
    }
    long step = 0;
    for (std::size_t i = 0; i < h.size(); ++i) step += h[i] * gens[k][i];
    for (long used = 0; used <= budget; used += step) {
        enumerate(gens, h, k + 1, rest, budget - used, count);
        rest -= gens[k];
    }
}

}  // namespace

BigInt exhaustive_partition_count(const std::vector<Root>& generators, const std::vector<long>& height,
                                  const LatticeVector& nu) {
    long budget = 0;
    for (std::size_t i = 0; i < height.size(); ++i) budget += height[i] * nu[i];
    BigInt count = 0;
    if (budget < 0) return count;
    for (const auto& g : generators) {
        long step = 0;
        for (std::size_t i = 0; i < height.size(); ++i) step += height[i] * g[i];
        if (step <= 0) throw InvalidInput("height functional is not positive on generator " + g.label());
    }
    enumerate(generators, height, 0, nu, budget, count);
    return count;
}

}  // namespace hcrep::hwmod
