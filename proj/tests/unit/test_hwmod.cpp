#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hcrep/error.hpp"
#include "hcrep/hwmod/criteria.hpp"
#include "hcrep/hwmod/umodule.hpp"

using namespace hcrep;
using namespace hcrep::hwmod;
using hcpair::build_pair;

namespace hcrep::rootsys {
void PrintTo(const LatticeVector& v, std::ostream* os) { *os << v.label(); }
void PrintTo(const Weight& w, std::ostream* os) { *os << "(" << w.to_string() << ")"; }
}  // namespace hcrep::rootsys

namespace {

RootSystem sys(const char* t) { return RootSystem(rootsys::CartanMatrix::parse(t)); }
Weight wt(std::vector<long> c) { return Weight::from_ints(c); }
Root rt(std::vector<int> c) { return Root(std::move(c)); }

const Root a = rt({1, 0}), b = rt({0, 1}), ab = rt({1, 1});

// A2 with compact roots +-alpha, P standard.
HCPairSpec a2_pair() { return build_pair(sys("A2"), {1}); }

}  // namespace

// ---- finite modules ----

TEST(Freudenthal, Sl2Adjoint) {
    auto rs = sys("A1");
    auto t = freudenthal_multiplicities(rs, PositiveSystem::standard(rs), wt({2}));
    ASSERT_EQ(t.weights.size(), 3u);
    EXPECT_EQ(t.weights[0].weight, wt({2}));
    EXPECT_EQ(t.weights[1].weight, wt({0}));
    EXPECT_EQ(t.weights[2].weight, wt({-2}));
    for (const auto& w : t.weights) EXPECT_EQ(w.multiplicity, 1);
    EXPECT_EQ(t.dimension(), 3);
}

TEST(Freudenthal, Trivial) {
    auto rs = sys("A2");
    auto t = freudenthal_multiplicities(rs, PositiveSystem::standard(rs), wt({0, 0}));
    ASSERT_EQ(t.weights.size(), 1u);
    EXPECT_EQ(t.multiplicity(wt({0, 0})), 1);
}

TEST(Freudenthal, A2AdjointHasDoubleZeroWeight) {
    auto rs = sys("A2");
    auto p = PositiveSystem::standard(rs);
    auto t = freudenthal_multiplicities(rs, p, p.half_sum());
    EXPECT_EQ(t.dimension(), 8);
    EXPECT_EQ(t.multiplicity(wt({0, 0})), 2);
    EXPECT_EQ(weyl_dimension(rs, p, p.half_sum()), 8);
}

TEST(Freudenthal, RejectsNonDominant) {
    auto rs = sys("A2");
    auto p = PositiveSystem::standard(rs);
    EXPECT_THROW(freudenthal_multiplicities(rs, p, wt({-1, 0})), InvalidInput);
    EXPECT_THROW(freudenthal_multiplicities(rs, p, Weight({Rational(1, 2), Rational(0)})), InvalidInput);
}

TEST(Freudenthal, MatchesWeylDimensionUpToRank3) {
    for (const char* t : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
        auto rs = sys(t);
        auto p = PositiveSystem::standard(rs);
        std::vector<long> c(rs.rank(), 0);
        for (;;) {
            auto lambda = Weight::from_ints(c);
            auto table = freudenthal_multiplicities(rs, p, lambda);
            EXPECT_EQ(table.dimension(), weyl_dimension(rs, p, lambda)) << t << " " << lambda.to_string();
            EXPECT_EQ(table.multiplicity(lambda), 1);
            // Weyl group invariance of the table.
            for (std::size_t i = 0; i < rs.rank(); ++i)
                for (const auto& w : table.weights)
                    EXPECT_EQ(table.multiplicity(rs.reflect(w.weight, i)), w.multiplicity);
            std::size_t i = 0;
            const long cap = rs.rank() == 3 ? 1 : 2;
            while (i < c.size() && ++c[i] > cap) c[i++] = 0;
            if (i == c.size()) break;
        }
    }
}

TEST(Freudenthal, CompactSubsystem) {
    // k of su(2,2) is sl2 x sl2 (+ center); lambda = (1, -5, 1) gives 2 x 2.
    auto pair = build_pair(sys("A3"), {1});
    auto pk = pair.standard_compact();
    auto t = freudenthal_multiplicities(pair.rs(), pk, wt({1, -5, 1}));
    EXPECT_EQ(t.dimension(), 4);
    EXPECT_EQ(weyl_dimension(pair.rs(), pk, wt({1, -5, 1})), 4);
}

// ---- partition function ----

TEST(Partition, KnownValues) {
    auto rs = sys("A2");
    PartitionFunctionCache cache({b, ab}, PositiveSystem::standard(rs));
    EXPECT_EQ(vector_partition(cache, rt({0, 0})), 1);
    EXPECT_EQ(vector_partition(cache, rt({1, 2})), 1);
    EXPECT_EQ(vector_partition(cache, rt({0, 2})), 1);
    EXPECT_EQ(vector_partition(cache, rt({1, 0})), 0);
    EXPECT_EQ(vector_partition(cache, rt({-1, 1})), 0);
}

TEST(Partition, MatchesExhaustiveCountAllPositiveRoots) {
    for (const char* t : {"A2", "B2", "G2", "A3"}) {
        auto rs = sys(t);
        auto p = PositiveSystem::standard(rs);
        PartitionFunctionCache cache(p.roots(), p);
        auto h = integral_height(p);
        std::vector<int> c(rs.rank(), 0);
        for (;;) {
            Root nu{c};
            if (cache.height(nu) <= 10)
                EXPECT_EQ(cache.count(nu), exhaustive_partition_count(p.roots(), h, nu)) << t << " " << nu.label();
            std::size_t i = 0;
            while (i < c.size() && ++c[i] > 5) c[i++] = 0;
            if (i == c.size()) break;
        }
    }
}

TEST(Partition, Sl2VermaSectionDimensions) {
    // Verma side: generators = all of P; for A2, N(a+b) = 2 (a+b, a + b).
    auto rs = sys("A2");
    auto p = PositiveSystem::standard(rs);
    PartitionFunctionCache cache(p.roots(), p);
    EXPECT_EQ(cache.count(ab), 2);
    EXPECT_EQ(cache.count(rt({2, 2})), 3);
}

TEST(Partition, NonstandardSystemHeight) {
    auto rs = sys("A2");
    auto p = PositiveSystem::of_full(rs, {-a, ab, b});
    PartitionFunctionCache cache({b, -a}, p);
    EXPECT_EQ(cache.count(rt({-2, 3})), 1);
    EXPECT_EQ(cache.count(rt({2, 0})), 0);
}

// ---- U-module ----

TEST(UModule, HighestWeightHasMultiplicityOne) {
    auto pair = a2_pair();
    for (auto lambda : {wt({0, 0}), wt({1, -3}), wt({2, 5})}) {
        UModule m(pair, PositiveSystem::standard(pair.rs()), lambda);
        EXPECT_EQ(m.multiplicity(lambda), 1);
    }
}

TEST(UModule, A2Examples) {
    auto pair = a2_pair();
    UModuleQuery q{&pair, PositiveSystem::standard(pair.rs()), wt({0, 0}), Weight::zero(2)};
    q.mu = pair.rs().to_weight(-b);
    EXPECT_EQ(u_module_multiplicity(q), 1);
    q.mu = pair.rs().to_weight(rt({-1, -2}));
    EXPECT_EQ(u_module_multiplicity(q), 1);
    q.mu = pair.rs().to_weight(-a);
    EXPECT_EQ(u_module_multiplicity(q), 0);
    q.mu = wt({1, 0});
    EXPECT_EQ(u_module_multiplicity(q), 0);
}

TEST(UModule, A2BruteForceTable) {
    auto pair = a2_pair();
    UModuleQuery q{&pair, PositiveSystem::standard(pair.rs()), wt({0, 0}), Weight::zero(2)};
    auto table = brute_force_u_module(q, 4);
    const auto& rs = pair.rs();
    std::map<Weight, BigInt> expected{
        {wt({0, 0}), 1},
        {rs.to_weight(-b), 1},
        {rs.to_weight(-ab), 1},
        {rs.to_weight(rt({0, -2})), 1},
        {rs.to_weight(rt({-1, -2})), 1},
        {rs.to_weight(rt({0, -3})), 1},
        {rs.to_weight(rt({-2, -2})), 1},
        {rs.to_weight(rt({-1, -3})), 1},
        {rs.to_weight(rt({0, -4})), 1},
    };
    EXPECT_EQ(table, expected);
}

TEST(UModule, DepthZeroIsFiniteModule) {
    auto pair = a2_pair();
    UModule m(pair, PositiveSystem::standard(pair.rs()), wt({2, -1}));
    auto table = m.brute_force(0);
    ASSERT_EQ(table.size(), m.finite_part().weights.size());
    for (const auto& w : m.finite_part().weights) EXPECT_EQ(table.at(w.weight), w.multiplicity);
}

TEST(UModule, A1PolynomialRing) {
    auto pair = build_pair(sys("A1"), {0});
    UModule m(pair, PositiveSystem::standard(pair.rs()), wt({0}));
    auto table = m.brute_force(7);
    ASSERT_EQ(table.size(), 8u);
    for (long j = 0; j <= 7; ++j) EXPECT_EQ(table.at(wt({-2 * j})), 1);
}

TEST(UModule, RejectsBadInput) {
    auto pair = a2_pair();
    auto rs = pair.rs();
    EXPECT_THROW(UModule(pair, PositiveSystem::standard(rs), wt({-1, 0})), InvalidInput);
    auto a3 = build_pair(sys("A3"), {1});
    std::size_t rejected = 0;
    for (const auto& p : rootsys::all_positive_systems(a3.rs()))
        if (!hcpair::is_admissible(a3, p)) {
            EXPECT_THROW(UModule(a3, p, Weight::zero(3)), InvalidInput);
            ++rejected;
        }
    EXPECT_GT(rejected, 0u);
}

TEST(UModule, MatchesOracleOnAdmissibleSystems) {
    struct Case {
        const char* type;
        std::vector<std::size_t> marks;
    };
    std::mt19937 rng(7);
    for (const Case& c : {Case{"A1", {0}}, Case{"A2", {1}}, Case{"A2", {0}}, Case{"A3", {1}}, Case{"A3", {0}},
                          Case{"B2", {0}}, Case{"C2", {1}}, Case{"A1xA1", {0, 1}}, Case{"B3", {0}},
                          Case{"C3", {2}}}) {
        auto pair = build_pair(sys(c.type), c.marks);
        auto pk = pair.standard_compact();
        for (const auto& p : hcpair::enumerate_admissible(pair, pk)) {
            auto pkp = pair.compact_part(p);
            std::vector<Weight> lambdas{Weight::zero(pair.rs().rank()), pkp.half_sum()};
            for (int k = 0; k < 2; ++k) {
                // A random P_k-dominant integral weight: sum of fundamental-like shifts.
                std::vector<long> x(pair.rs().rank());
                for (auto& v : x) v = std::uniform_int_distribution<long>(-3, 3)(rng);
                Weight lambda = Weight::from_ints(x);
                bool ok = is_dominant_integral(pair.rs(), pkp, lambda);
                if (ok) lambdas.push_back(lambda);
            }
            for (const auto& lambda : lambdas) {
                if (!is_dominant_integral(pair.rs(), pkp, lambda)) continue;
                UModule m(pair, p, lambda);
                auto cmp = compare_with_oracle(m, 6);
                EXPECT_TRUE(cmp.agree()) << c.type << " lambda " << lambda.to_string() << ": "
                                         << (cmp.mismatches.empty() ? "" : cmp.mismatches.front());
                EXPECT_GT(cmp.weights_checked, 0u);
            }
        }
    }
}

TEST(UModule, PrintedConventionDiffersFromOracle) {
    auto pair = a2_pair();
    UModule m(pair, PositiveSystem::standard(pair.rs()), wt({0, 0}));
    auto mu = pair.rs().to_weight(-b);
    EXPECT_EQ(m.multiplicity(mu), 1);
    EXPECT_EQ(m.multiplicity_printed_convention(mu), 0);
}

// ---- criteria ----

TEST(Criteria, IrreducibilityA2) {
    auto pair = a2_pair();
    auto p = PositiveSystem::standard(pair.rs());
    EXPECT_EQ(p.half_sum(), wt({1, 1}));
    auto v = irreducibility_sufficient(pair, p, wt({0, 0}));
    ASSERT_NE(v.find("lambda_plus_delta_nonpositive_on_P_n"), nullptr);
    EXPECT_EQ(v.find("lambda_plus_delta_nonpositive_on_P_n")->witnesses,
              (std::vector<std::string>{"b: 1", "a+b: 2"}));
    EXPECT_FALSE(v.holds);
    EXPECT_TRUE(irreducibility_sufficient(pair, p, wt({0, -10})).holds);
    EXPECT_FALSE(irreducibility_sufficient(pair, p, wt({0, 10})).holds);
    auto bad = irreducibility_sufficient(pair, p, wt({-1, -10}));
    EXPECT_FALSE(bad.holds);
    EXPECT_FALSE(bad.preconditions.empty());
}

TEST(Criteria, Duflo) {
    auto a1 = sys("A1");
    auto p1 = PositiveSystem::standard(a1);
    EXPECT_TRUE(duflo_criterion(a1, p1, wt({-1})).holds);
    EXPECT_FALSE(duflo_criterion(a1, p1, wt({0})).holds);
    EXPECT_TRUE(duflo_criterion(a1, p1, Weight({Rational(1, 2)})).holds);
    auto a2 = sys("A2");
    auto p2 = PositiveSystem::standard(a2);
    auto v = duflo_criterion(a2, p2, p2.half_sum());
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(v.checks.front().witnesses, (std::vector<std::string>{"b: 2", "a: 2", "a+b: 4"}));
}

TEST(Criteria, Unitarity) {
    auto pair = a2_pair();
    auto p = PositiveSystem::standard(pair.rs());
    EXPECT_TRUE(unitarity_necessary(pair, p, wt({0, 0})).holds);
    // lambda(H_{a+b}) = 1 - 3 = -2 <= 0.
    EXPECT_TRUE(unitarity_necessary(pair, p, wt({1, -3})).holds);
    EXPECT_FALSE(unitarity_necessary(pair, p, wt({3, -1})).holds);
    auto v = unitarity_necessary(pair, p, wt({-1, 0}));
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(v.find("nonnegative_on_compact")->witnesses, (std::vector<std::string>{"a: -1"}));
}

TEST(Criteria, TrivialUnitaryScan) {
    auto a2 = a2_pair();
    EXPECT_TRUE(trivial_unitary_scan(a2, PositiveSystem::standard(a2.rs()), 5).holds);
    auto a1 = build_pair(sys("A1"), {0});
    EXPECT_TRUE(trivial_unitary_scan(a1, PositiveSystem::standard(a1.rs()), 10).holds);
    auto a3 = build_pair(sys("A3"), {1});
    for (const auto& p : hcpair::enumerate_admissible(a3, a3.standard_compact()))
        EXPECT_TRUE(trivial_unitary_scan(a3, p, 3).holds);
    EXPECT_THROW(trivial_unitary_scan(a1, PositiveSystem::standard(a1.rs()), 0), InvalidInput);
}

TEST(Criteria, InfinitesimalCharacterA1) {
    auto rs = sys("A1");
    EXPECT_TRUE(infinitesimal_character_equal(rs, wt({3}), wt({3})).equal);
    auto m = infinitesimal_character_equal(rs, wt({0}), wt({-2}));
    EXPECT_TRUE(m.equal);
    EXPECT_EQ(m.word, (std::vector<std::size_t>{0}));
    EXPECT_FALSE(infinitesimal_character_equal(rs, wt({0}), wt({-1})).equal);
}

TEST(Criteria, InfinitesimalCharacterIsEquivalenceRelation) {
    auto rs = sys("A2");
    auto w = rootsys::weyl_group(rs);
    std::vector<Weight> sample;
    for (long x = -3; x <= 2; ++x)
        for (long y = -3; y <= 2; ++y) sample.push_back(wt({x, y}));
    const std::size_t n = sample.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto m = infinitesimal_character_equal(rs, w, sample[i], sample[j]);
            rel[i][j] = m.equal;
            // Oracle: same dominant representative of lambda + delta.
            auto di = rootsys::dominant_representative(rs, sample[i] + rs.delta());
            auto dj = rootsys::dominant_representative(rs, sample[j] + rs.delta());
            EXPECT_EQ(m.equal, di == dj);
        }
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_TRUE(rel[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_EQ(rel[i][j], rel[j][i]);
            for (std::size_t k = 0; k < n; ++k)
                if (rel[i][j] && rel[j][k]) EXPECT_TRUE(rel[i][k]);
        }
    }
}

TEST(Criteria, InfinitesimalCharacterBound) {
    auto rs = sys("E8");
    EXPECT_THROW(infinitesimal_character_equal(rs, Weight::zero(8), Weight::zero(8)), BoundExceeded);
}
