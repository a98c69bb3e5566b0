#include "hcrep/rootsys/positive_system.hpp"

#include <algorithm>

#include "hcrep/error.hpp"
#include "hcrep/rootsys/weyl.hpp"

namespace hcrep::rootsys {

namespace {

void sort_by_enumeration(const RootSystem& rs, std::vector<Root>& v) {
    for (const auto& r : v)
        if (!rs.is_root(r)) throw InvalidInput(r.label() + " is not a root");
    std::sort(v.begin(), v.end(),
              [&](const Root& a, const Root& b) { return *rs.index_of(a) < *rs.index_of(b); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool is_positive_system(const std::vector<Root>& ambient, const std::vector<Root>& roots) {
    std::set<Root> amb(ambient.begin(), ambient.end());
    std::set<Root> chosen(roots.begin(), roots.end());
    for (const auto& r : chosen)
        if (!amb.count(r)) return false;
    for (const auto& r : amb)
        if (chosen.count(r) == chosen.count(-r)) return false;
    for (const auto& a : chosen)
        for (const auto& b : chosen)
            if (amb.count(a + b) && !chosen.count(a + b)) return false;
    return true;
}

PositiveSystem::PositiveSystem(const RootSystem& rs, std::vector<Root> ambient, std::vector<Root> roots)
    : ambient_(std::move(ambient)), roots_(std::move(roots)) {
    sort_by_enumeration(rs, ambient_);
    sort_by_enumeration(rs, roots_);
    if (!is_positive_system(ambient_, roots_))
        throw InvalidInput("not a positive system: requires exactly one of +-gamma for each root "
                           "and closure under addition");
    members_.insert(roots_.begin(), roots_.end());

    for (const auto& g : roots_) {
        bool decomposable = false;
        for (const auto& a : roots_)
            if (members_.count(g - a)) {
                decomposable = true;
                break;
            }
        if (!decomposable) simple_.push_back(g);
    }

    const std::size_t n = rs.rank(), k = simple_.size();
    if (k > 0) {
        RationalMatrix s(n, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n; ++i) s(i, j) = simple_[j][i];
        RationalMatrix st = s.transpose();
        auto gram_inv = (st * s).inverse();
        if (!gram_inv) throw InternalError("simple roots of a positive system are dependent");
        simple_pinv_ = *gram_inv * st;
    }

    half_sum_ = Weight::zero(n);
    for (const auto& r : roots_) half_sum_ = half_sum_ + rs.to_weight(r);
    half_sum_ = half_sum_ * Rational(1, 2);
}

PositiveSystem PositiveSystem::standard(const RootSystem& rs) {
    return PositiveSystem(rs, rs.roots(), rs.positive_roots());
}

PositiveSystem PositiveSystem::of_full(const RootSystem& rs, std::vector<Root> roots) {
    return PositiveSystem(rs, rs.roots(), std::move(roots));
}

bool PositiveSystem::contains_all(const std::vector<Root>& rs) const {
    return std::all_of(rs.begin(), rs.end(), [&](const Root& r) { return contains(r); });
}

std::vector<Rational> PositiveSystem::simple_coordinates(const LatticeVector& v) const {
    const std::size_t k = simple_.size();
    std::vector<Rational> vv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) vv[i] = v[i];
    std::vector<Rational> x = k ? simple_pinv_ * vv : std::vector<Rational>{};
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational back;
        for (std::size_t j = 0; j < k; ++j) back += x[j] * simple_[j][i];
        if (back != vv[i]) throw InvalidInput(v.label() + " is outside the span of the simple roots");
    }
    return x;
}

Rational PositiveSystem::height(const LatticeVector& v) const {
    Rational h;
    for (const auto& c : simple_coordinates(v)) h += c;
    return h;
}

std::vector<Rational> PositiveSystem::height_functional() const {
    std::vector<Rational> f(simple_pinv_.cols());
    for (std::size_t j = 0; j < simple_pinv_.cols(); ++j)
        for (std::size_t i = 0; i < simple_pinv_.rows(); ++i) f[j] += simple_pinv_(i, j);
    return f;
}

std::vector<PositiveSystem> all_positive_systems(const RootSystem& rs) {
    std::vector<PositiveSystem> out;
    for (const auto& w : weyl_group(rs)) {
        std::vector<Root> image;
        for (const auto& r : rs.positive_roots()) image.push_back(w.apply(r));
        out.push_back(PositiveSystem::of_full(rs, std::move(image)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hcrep::rootsys
