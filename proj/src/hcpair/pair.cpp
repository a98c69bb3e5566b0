#include "hcrep/hcpair/pair.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "hcrep/error.hpp"
#include "hcrep/linalg.hpp"
#include "hcrep/rootsys/weyl.hpp"

namespace hcrep::hcpair {

namespace {

std::size_t lattice_rank(const std::vector<Root>& vs, std::size_t n) {
    if (vs.empty()) return 0;
    RationalMatrix m(vs.size(), n);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
    return m.rank();
}

bool supported_in(const RootSystem& rs, const Root& r, std::size_t component) {
    return rs.component_of(r) == component;
}

}  // namespace

HCPairSpec::HCPairSpec(RootSystem rs, std::vector<std::size_t> marks)
    : rs_(std::move(rs)), marks_(std::move(marks)) {
    std::sort(marks_.begin(), marks_.end());
    marks_.erase(std::unique(marks_.begin(), marks_.end()), marks_.end());
    if (marks_.empty()) throw InvalidInput("no noncompact roots: the marking is empty");
    for (auto m : marks_)
        if (m >= rs_.rank())
            throw InvalidInput("mark " + std::to_string(m + 1) + " is not a simple-root index (rank " +
                               std::to_string(rs_.rank()) + ")");

    for (const auto& r : rs_.roots()) (is_noncompact(r) ? noncompact_ : compact_).push_back(r);

    // Parity gradings are additive; assert the closure relations anyway.
    for (const auto& a : rs_.roots())
        for (const auto& b : rs_.roots())
            if (rs_.is_root(a + b) && is_noncompact(a + b) != (is_noncompact(a) != is_noncompact(b)))
                throw InternalError("grading is not a homomorphism at " + a.label() + ", " + b.label());

    // Ladder components.
    ladder_index_.assign(rs_.roots().size(), SIZE_MAX);
    for (const auto& start : noncompact_) {
        std::size_t si = *rs_.index_of(start);
        if (ladder_index_[si] != SIZE_MAX) continue;
        std::size_t id = ladders_.size();
        std::vector<Root> comp;
        std::queue<Root> todo;
        ladder_index_[si] = id;
        todo.push(start);
        while (!todo.empty()) {
            Root g = todo.front();
            todo.pop();
            comp.push_back(g);
            for (const auto& a : compact_) {
                auto idx = rs_.index_of(g + a);
                if (idx && ladder_index_[*idx] == SIZE_MAX) {
                    ladder_index_[*idx] = id;
                    todo.push(g + a);
                }
            }
        }
        std::sort(comp.begin(), comp.end(),
                  [&](const Root& x, const Root& y) { return *rs_.index_of(x) < *rs_.index_of(y); });
        ladders_.push_back(std::move(comp));
    }

    center_dim_ = rs_.rank() - lattice_rank(compact_, rs_.rank());

    const auto& comps = rs_.cartan().components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::set<std::size_t> ladders_here;
        for (const auto& g : noncompact_)
            if (supported_in(rs_, g, c)) ladders_here.insert(ladder_of(g));
        if (ladders_here.size() == 2) {
            const auto& first = ladders_[*ladders_here.begin()];
            const auto& second = ladders_[*ladders_here.rbegin()];
            std::set<Root> neg;
            for (const auto& g : first) neg.insert(-g);
            if (neg != std::set<Root>(second.begin(), second.end()))
                throw InternalError("ladder components of a simple factor are not opposite");
            hermitian_.push_back(c);
        } else if (ladders_here.size() == 1) {
            nonhermitian_.push_back(c);
        } else if (ladders_here.size() > 2) {
            throw InternalError("simple factor with more than two ladder components");
        }
        std::size_t marks_here = 0;
        for (auto m : marks_)
            if (rs_.cartan().component_of_node(m) == c) ++marks_here;
        if (marks_here > 1) multi_mark_.push_back(c);
    }
    if (center_dim_ != hermitian_.size())
        throw InternalError("center dimension differs from the number of Hermitian factors");
}

bool HCPairSpec::is_noncompact(const LatticeVector& v) const {
    long s = 0;
    for (auto m : marks_) s += v[m];
    return (s % 2) != 0;
}

std::size_t HCPairSpec::ladder_of(const Root& noncompact) const {
    auto idx = rs_.index_of(noncompact);
    if (!idx || ladder_index_[*idx] == SIZE_MAX)
        throw InvalidInput(noncompact.label() + " is not a noncompact root");
    return ladder_index_[*idx];
}

PositiveSystem HCPairSpec::compact_part(const PositiveSystem& p) const {
    std::vector<Root> pk;
    for (const auto& r : p.roots())
        if (is_compact(r)) pk.push_back(r);
    return PositiveSystem(rs_, compact_, std::move(pk));
}

PositiveSystem HCPairSpec::standard_compact() const {
    return compact_part(PositiveSystem::standard(rs_));
}

HCPairSpec build_pair(const RootSystem& rs, const std::vector<std::size_t>& marks) {
    return HCPairSpec(rs, marks);
}

std::vector<Root> totally_positive_roots(const HCPairSpec& pair, const PositiveSystem& p) {
    std::vector<Root> out;
    for (const auto& ladder : pair.ladder_components())
        if (p.contains_all(ladder)) out.insert(out.end(), ladder.begin(), ladder.end());
    const auto& rs = pair.rs();
    std::sort(out.begin(), out.end(),
              [&](const Root& x, const Root& y) { return *rs.index_of(x) < *rs.index_of(y); });
    return out;
}

bool is_admissible(const HCPairSpec& pair, const PositiveSystem& p) {
    return !totally_positive_roots(pair, p).empty();
}

AdmissibleSystemReport ideal_decomposition(const HCPairSpec& pair, const PositiveSystem& p) {
    const auto& rs = pair.rs();
    AdmissibleSystemReport rep;
    rep.positive_system = p.roots();
    rep.totally_positive = totally_positive_roots(pair, p);
    rep.admissible = !rep.totally_positive.empty();

    std::set<std::size_t> gt;
    for (const auto& g : rep.totally_positive) gt.insert(rs.component_of(g));
    for (std::size_t c = 0; c < rs.cartan().components().size(); ++c) {
        if (gt.count(c)) {
            rep.gt_components.push_back(c);
            rep.gt_rank += rs.cartan().components()[c].size();
        } else {
            rep.g1_components.push_back(c);
        }
    }
    for (const auto& r : rs.roots()) (gt.count(rs.component_of(r)) ? rep.gt_roots : rep.g1_roots).push_back(r);

    PositiveSystem pk = pair.compact_part(p);
    for (const auto& a : pk.simple_roots())
        if (gt.count(rs.component_of(a))) rep.compact_simple.push_back(a);

    for (const auto& ladder : pair.ladder_components()) {
        if (!p.contains_all(ladder)) continue;
        // Lowest element: every other member differs from it by a nonnegative
        // integral combination of compact simple roots.
        std::vector<Root> lowest;
        for (const auto& cand : ladder) {
            bool below_all = true;
            for (const auto& g : ladder) {
                if (g == cand) continue;
                auto x = pk.simple_coordinates(g - cand);
                if (!std::all_of(x.begin(), x.end(),
                                 [](const Rational& c) { return c >= 0 && is_integer(c); })) {
                    below_all = false;
                    break;
                }
            }
            if (below_all) lowest.push_back(cand);
        }
        if (lowest.size() != 1)
            throw InternalError("k-summand without a unique lowest root");
        rep.summands.push_back(ladder);
        rep.lowest_roots.push_back(lowest.front());
    }
    rep.center_dim_s = rep.summands.size();
    return rep;
}

Verdict verify_theorem3(const HCPairSpec& pair, const AdmissibleSystemReport& rep) {
    if (!rep.admissible) throw InvalidInput("positive system is not admissible");
    const auto& rs = pair.rs();
    PositiveSystem p = PositiveSystem::of_full(rs, rep.positive_system);
    std::set<std::size_t> gt(rep.gt_components.begin(), rep.gt_components.end());
    auto in_gt = [&](const Root& r) { return gt.count(rs.component_of(r)) != 0; };
    const std::size_t r = rep.compact_simple.size(), s = rep.lowest_roots.size();

    Verdict v;
    if (!rep.g1_components.empty())
        v.notes.push_back("g_1 is nonzero; clauses are checked on the ideal g_t");
    if (!pair.multi_mark_components().empty())
        v.notes.push_back("marking has a simple factor with more than one mark");

    Check rank{"rank_r_plus_s"};
    rank.passed = (r + s == rep.gt_rank);
    rank.witnesses.push_back("r=" + std::to_string(r) + " s=" + std::to_string(s) +
                             " rank(g_t)=" + std::to_string(rep.gt_rank));
    v.add(rank);

    Check simple{"simple_roots"};
    std::set<Root> expected(rep.compact_simple.begin(), rep.compact_simple.end());
    expected.insert(rep.lowest_roots.begin(), rep.lowest_roots.end());
    std::set<Root> actual;
    for (const auto& a : p.simple_roots())
        if (in_gt(a)) actual.insert(a);
    simple.passed = (expected == actual);
    if (!simple.passed)
        for (const auto& a : actual)
            if (!expected.count(a)) simple.witnesses.push_back("unexpected simple root " + a.label());
    v.add(simple);

    Check indep{"beta_independent_mod_compact"};
    std::vector<Root> both = rep.compact_simple;
    both.insert(both.end(), rep.lowest_roots.begin(), rep.lowest_roots.end());
    std::vector<Root> compact_gt;
    for (const auto& c : pair.compact_roots())
        if (in_gt(c)) compact_gt.push_back(c);
    RationalMatrix mb(both.size(), rs.rank()), mc(std::max<std::size_t>(compact_gt.size(), 1), rs.rank());
    for (std::size_t i = 0; i < both.size(); ++i)
        for (std::size_t j = 0; j < rs.rank(); ++j) mb(i, j) = both[i][j];
    for (std::size_t i = 0; i < compact_gt.size(); ++i)
        for (std::size_t j = 0; j < rs.rank(); ++j) mc(i, j) = compact_gt[i][j];
    std::size_t rank_c = compact_gt.empty() ? 0 : mc.rank();
    indep.passed = (both.empty() ? 0 : mb.rank()) == rank_c + s;
    v.add(indep);

    // Coordinates over the simple roots of P; for a noncompact root of g_t the
    // beta-part must be a unit vector and the compact part nonnegative.
    Check decomp{"unique_noncompact_decomposition"};
    Check center{"center_values"};
    std::vector<std::size_t> beta_pos, alpha_pos;
    for (std::size_t k = 0; k < p.simple_roots().size(); ++k) {
        const auto& a = p.simple_roots()[k];
        if (std::find(rep.lowest_roots.begin(), rep.lowest_roots.end(), a) != rep.lowest_roots.end())
            beta_pos.push_back(k);
        else if (in_gt(a))
            alpha_pos.push_back(k);
    }
    if (simple.passed) {
        for (const auto& g : rep.gt_roots) {
            auto x = p.simple_coordinates(g);
            std::size_t nonzero = 0;
            bool unit = true;
            for (auto k : beta_pos) {
                if (x[k] != 0) ++nonzero;
                if (x[k] != 0 && x[k] != 1 && x[k] != -1) unit = false;
            }
            if (pair.is_compact(g)) {
                if (nonzero != 0) center.witnesses.push_back(g.label() + " compact but nonzero on c");
                continue;
            }
            if (nonzero != 1 || !unit) center.witnesses.push_back(g.label() + " not +-1 on exactly one c-direction");
            if (!p.contains(g)) continue;
            bool ok = nonzero == 1 && unit;
            for (auto k : beta_pos) ok = ok && x[k] >= 0;
            for (auto k : alpha_pos) ok = ok && x[k] >= 0 && is_integer(x[k]);
            if (!ok) decomp.witnesses.push_back(g.label());
        }
        decomp.passed = decomp.witnesses.empty();
        center.passed = center.witnesses.empty();
    } else {
        decomp.passed = center.passed = false;
        decomp.witnesses.push_back("simple roots of P do not have the expected form");
    }
    v.add(decomp);
    v.add(center);

    Check abelian{"p_plus_abelian"};
    for (std::size_t i = 0; i < rep.totally_positive.size(); ++i)
        for (std::size_t j = i; j < rep.totally_positive.size(); ++j) {
            Root sum = rep.totally_positive[i] + rep.totally_positive[j];
            if (rs.is_root(sum))
                abelian.witnesses.push_back(rep.totally_positive[i].label() + " + " +
                                            rep.totally_positive[j].label());
        }
    abelian.passed = abelian.witnesses.empty();
    v.add(abelian);

    Check pt{"p_t_is_noncompact_positive_of_g_t"};
    std::vector<Root> pn_gt;
    for (const auto& g : rep.positive_system)
        if (pair.is_noncompact(g) && in_gt(g)) pn_gt.push_back(g);
    pt.passed = (std::set<Root>(pn_gt.begin(), pn_gt.end()) ==
                 std::set<Root>(rep.totally_positive.begin(), rep.totally_positive.end()));
    v.add(pt);
    return v;
}

std::vector<PositiveSystem> enumerate_admissible(const HCPairSpec& pair, const PositiveSystem& pk) {
    const auto& rs = pair.rs();
    if (!is_positive_system(pair.compact_roots(), pk.roots()))
        throw InvalidInput("P_k is not a positive system of the compact roots");
    if (pair.hermitian_components().empty()) return {};

    // Choices per simple factor; compact factors contribute P_k alone.
    std::vector<std::vector<std::vector<Root>>> choices;
    for (auto c : pair.hermitian_components()) {
        const std::vector<Root>* plus = nullptr;
        for (const auto& g : rs.positive_roots())
            if (pair.is_noncompact(g) && rs.component_of(g) == c) {
                plus = &pair.ladder_components()[pair.ladder_of(g)];
                break;
            }
        std::vector<Root> minus;
        for (const auto& g : *plus) minus.push_back(-g);
        choices.push_back({*plus, minus});
    }
    for (auto c : pair.nonhermitian_components()) {
        const auto& nodes = rs.cartan().components()[c];
        std::vector<Root> std_pos, pk_here;
        for (const auto& g : rs.positive_roots())
            if (rs.component_of(g) == c) std_pos.push_back(g);
        for (const auto& g : pk.roots())
            if (rs.component_of(g) == c) pk_here.push_back(g);
        std::set<std::vector<Root>> found;
        for (const auto& w : rootsys::weyl_subgroup(rs, nodes)) {
            std::set<Root> image;
            for (const auto& g : std_pos) image.insert(w.apply(g));
            if (!std::all_of(pk_here.begin(), pk_here.end(), [&](const Root& a) { return image.count(a); }))
                continue;
            std::vector<Root> nc;
            for (const auto& g : image)
                if (pair.is_noncompact(g)) nc.push_back(g);
            found.insert(nc);
        }
        choices.emplace_back(found.begin(), found.end());
    }

    std::vector<PositiveSystem> out;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
        std::vector<Root> roots = pk.roots();
        for (std::size_t i = 0; i < choices.size(); ++i)
            roots.insert(roots.end(), choices[i][pick[i]].begin(), choices[i][pick[i]].end());
        PositiveSystem p = PositiveSystem::of_full(rs, std::move(roots));
        if (!is_fully_admissible(pair, p))
            throw InternalError("assembled positive system is not admissible");
        out.push_back(std::move(p));
        std::size_t i = 0;
        while (i < choices.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == choices.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_fully_admissible(const HCPairSpec& pair, const PositiveSystem& p) {
    if (pair.hermitian_components().empty()) return false;
    std::set<std::size_t> hit;
    for (const auto& g : totally_positive_roots(pair, p)) hit.insert(pair.rs().component_of(g));
    return std::all_of(pair.hermitian_components().begin(), pair.hermitian_components().end(),
                       [&](std::size_t c) { return hit.count(c) != 0; });
}

std::vector<PositiveSystem> brute_force_admissible(const HCPairSpec& pair, const PositiveSystem& pk) {
    std::vector<PositiveSystem> out;
    for (auto& p : rootsys::all_positive_systems(pair.rs()))
        if (p.contains_all(pk.roots()) && is_fully_admissible(pair, p)) out.push_back(std::move(p));
    return out;
}

std::vector<PositiveSystem> admissible_containing(const HCPairSpec& pair, const PositiveSystem& pk) {
    std::vector<PositiveSystem> out;
    for (auto& p : rootsys::all_positive_systems(pair.rs()))
        if (p.contains_all(pk.roots()) && is_admissible(pair, p)) out.push_back(std::move(p));
    return out;
}

Verdict chain_length_check(const HCPairSpec& pair, const std::vector<Root>& pt) {
    const auto& rs = pair.rs();
    Verdict v;
    Check c{"alpha_string_length_at_most_3"};
    for (const auto& g : pt) {
        if (!pair.is_noncompact(g)) throw InvalidInput(g.label() + " is not noncompact");
        for (const auto& a : pair.compact_roots()) {
            int len = 1;
            for (Root x = g - a; rs.is_root(x); x -= a) ++len;
            for (Root x = g + a; rs.is_root(x); x += a) ++len;
            if (len > 3)
                c.witnesses.push_back(g.label() + " along " + a.label() + ": length " + std::to_string(len));
        }
    }
    c.passed = c.witnesses.empty();
    v.add(c);
    return v;
}

}  // namespace hcrep::hcpair
