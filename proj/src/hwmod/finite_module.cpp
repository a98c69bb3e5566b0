#include "hcrep/hwmod/finite_module.hpp"

#include <map>

#include "hcrep/error.hpp"

namespace hcrep::hwmod {

namespace {

// (v, w) for a lattice vector v and a weight w: <alpha_i, w> = d_i w_i.
Rational pair_with(const RootSystem& rs, const LatticeVector& v, const Weight& w) {
    Rational s;
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (v[i] != 0) s += v[i] * rs.symmetrizer()[i] * w[i];
    return s;
}

}  // namespace

BigInt FiniteModuleTable::dimension() const {
    BigInt d = 0;
    for (const auto& w : weights) d += w.multiplicity;
    return d;
}

BigInt FiniteModuleTable::multiplicity(const Weight& mu) const {
    for (const auto& w : weights)
        if (w.weight == mu) return w.multiplicity;
    return 0;
}

bool is_dominant_integral(const RootSystem& rs, const PositiveSystem& pk, const Weight& lambda) {
    for (const auto& a : pk.roots()) {
        Rational v = rs.pairing(lambda, a);
        if (!is_integer(v) || v < 0) return false;
    }
    return true;
}

FiniteModuleTable freudenthal_multiplicities(const RootSystem& rs, const PositiveSystem& pk, const Weight& lambda) {
    if (lambda.size() != rs.rank()) throw InvalidInput("weight has wrong rank");
    if (!is_dominant_integral(rs, pk, lambda))
        throw InvalidInput("highest weight (" + lambda.to_string() + ") is not dominant integral");

    const Weight lr = lambda + pk.half_sum();
    const auto hf = pk.height_functional();
    auto height = [&](const LatticeVector& v) {
        Rational h;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) h += hf[i] * v[i];
        return h;
    };
    std::map<LatticeVector, BigInt> mult;  // keyed by depth nu = lambda - mu
    const LatticeVector zero = LatticeVector::zero(rs.rank());
    mult[zero] = 1;

    std::vector<LatticeVector> layer{zero};
    FiniteModuleTable table;
    table.highest_weight = lambda;
    table.weights.push_back({lambda, zero, 1});
    while (!layer.empty()) {
        std::map<LatticeVector, bool> candidates;
        for (const auto& nu : layer)
            for (const auto& a : pk.simple_roots()) candidates[nu + a] = true;
        std::vector<LatticeVector> next;
        for (const auto& [nu, unused] : candidates) {
            // (|lambda+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{alpha>0} sum_{j>=1} m(mu+j alpha)(mu+j alpha, alpha)
            Rational denom = 2 * pair_with(rs, nu, lr) - rs.inner(nu, nu);
            Rational num;
            for (const auto& a : pk.roots()) {
                Rational la = pair_with(rs, a, lambda);
                for (LatticeVector up = nu - a; height(up) >= 0; up -= a) {
                    auto it = mult.find(up);
                    if (it != mult.end()) num += 2 * Rational(it->second) * (la - rs.inner(up, a));
                }
            }
            if (denom <= 0) {
                if (num != 0) throw InternalError("Freudenthal recursion hit a nonpositive denominator");
                continue;
            }
            Rational m = num / denom;
            if (!is_integer(m) || m < 0) throw InternalError("non-integral multiplicity");
            if (m == 0) continue;
            mult[nu] = m.get_num();
            next.push_back(nu);
            table.weights.push_back({lambda - rs.to_weight(nu), nu, m.get_num()});
        }
        layer = std::move(next);
    }
    return table;
}

BigInt weyl_dimension(const RootSystem& rs, const PositiveSystem& pk, const Weight& lambda) {
    const Weight lr = lambda + pk.half_sum();
    Rational d = 1;
    for (const auto& a : pk.roots()) d *= pair_with(rs, a, lr) / pair_with(rs, a, pk.half_sum());
    if (!is_integer(d)) throw InvalidInput("Weyl dimension is not integral; weight not dominant integral");
    return d.get_num();
}

}  // namespace hcrep::hwmod
