#include "hcrep/hwmod/criteria.hpp"

#include "hcrep/error.hpp"
#include "hcrep/hwmod/finite_module.hpp"

namespace hcrep::hwmod {

namespace {

std::string value_at(const rootsys::Root& g, const Rational& v) { return g.label() + ": " + to_string(v); }

void check_rank(const RootSystem& rs, const Weight& lambda) {
    if (lambda.size() != rs.rank()) throw InvalidInput("weight has wrong rank");
}

}  // namespace

Verdict irreducibility_sufficient(const HCPairSpec& pair, const PositiveSystem& p, const Weight& lambda) {
    const auto& rs = pair.rs();
    check_rank(rs, lambda);
    Verdict v;
    if (!hcpair::is_admissible(pair, p)) v.violate("positive system is not admissible");
    if (!is_dominant_integral(rs, pair.compact_part(p), lambda))
        v.violate("lambda is not dominant integral for P_k");
    Check c{"lambda_plus_delta_nonpositive_on_P_n"};
    const Weight ld = lambda + p.half_sum();
    for (const auto& g : p.roots()) {
        if (!pair.is_noncompact(g)) continue;
        Rational x = rs.pairing(ld, g);
        if (x > 0) c.passed = false;
        c.witnesses.push_back(value_at(g, x));
    }
    v.add(c);
    return v;
}

Verdict duflo_criterion(const RootSystem& rs, const PositiveSystem& p, const Weight& lambda) {
    check_rank(rs, lambda);
    Verdict v;
    Check c{"no_positive_integer_on_P"};
    const Weight ld = lambda + p.half_sum();
    for (const auto& g : p.roots()) {
        Rational x = rs.pairing(ld, g);
        if (is_integer(x) && x > 0) {
            c.passed = false;
            c.witnesses.push_back(value_at(g, x));
        }
    }
    v.add(c);
    return v;
}

Verdict unitarity_necessary(const HCPairSpec& pair, const PositiveSystem& p, const Weight& lambda) {
    const auto& rs = pair.rs();
    check_rank(rs, lambda);
    Verdict v;
    Check comp{"nonnegative_on_compact"}, nonc{"nonpositive_on_noncompact"};
    for (const auto& g : p.roots()) {
        Rational x = rs.pairing(lambda, g);
        if (pair.is_compact(g) && x < 0) {
            comp.passed = false;
            comp.witnesses.push_back(value_at(g, x));
        }
        if (pair.is_noncompact(g) && x > 0) {
            nonc.passed = false;
            nonc.witnesses.push_back(value_at(g, x));
        }
    }
    v.add(comp);
    v.add(nonc);
    return v;
}

Verdict trivial_unitary_scan(const HCPairSpec& pair, const PositiveSystem& p, int box) {
    const auto& rs = pair.rs();
    if (box < 1) throw InvalidInput("box must be at least 1");
    Verdict v;
    Check c{"only_trivial_survives"};
    std::vector<long> coords(rs.rank(), -box);
    std::size_t scanned = 0, survivors = 0;
    for (;;) {
        Weight lambda = Weight::from_ints(coords);
        ++scanned;
        bool dominant = true;
        for (const auto& g : p.roots())
            if (rs.pairing(lambda, g) < 0) {
                dominant = false;
                break;
            }
        if (dominant && unitarity_necessary(pair, p, lambda).holds) {
            ++survivors;
            if (!lambda.is_zero()) {
                c.passed = false;
                c.witnesses.push_back("(" + lambda.to_string() + ")");
            }
        }
        std::size_t i = 0;
        while (i < coords.size() && ++coords[i] > box) coords[i++] = -box;
        if (i == coords.size()) break;
    }
    if (survivors == 0) {
        c.passed = false;
        c.witnesses.push_back("lambda = 0 did not survive");
    }
    v.notes.push_back("scanned " + std::to_string(scanned) + " weights, " + std::to_string(survivors) +
                      " survivor(s)");
    v.add(c);
    return v;
}

OrbitMatch infinitesimal_character_equal(const RootSystem& rs, const std::vector<rootsys::WeylGroupElement>& w,
                                         const Weight& lambda, const Weight& mu) {
    check_rank(rs, lambda);
    check_rank(rs, mu);
    const Weight target = mu + rs.delta();
    const Weight source = lambda + rs.delta();
    for (const auto& s : w)
        if (s.apply(source) == target) return {true, s.word()};
    return {};
}

OrbitMatch infinitesimal_character_equal(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    return infinitesimal_character_equal(rs, rootsys::weyl_group(rs), lambda, mu);
}

}  // namespace hcrep::hwmod
