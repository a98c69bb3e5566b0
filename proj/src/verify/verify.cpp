#include "hcrep/verify/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>

#include "hcrep/digest.hpp"
#include "hcrep/error.hpp"
#include "hcrep/hccell/cell.hpp"
#include "hcrep/hcpair/pair.hpp"
#include "hcrep/hwmod/criteria.hpp"
#include "hcrep/hwmod/umodule.hpp"
#include "hcrep/parallel.hpp"
#include "hcrep/uea/center.hpp"

namespace hcrep::verify {

namespace {

using nlohmann::json;
using rootsys::CartanMatrix;
using rootsys::PositiveSystem;
using rootsys::Root;
using rootsys::RootSystem;
using rootsys::Weight;

struct Fixture {
    const char* name;
    const char* type;
    std::vector<std::size_t> marks;  // 0-based
};

// su(2,1), su(2,2), su(1,1), su(1,1) x su(1,1), sp(4,R).
const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> f{{"A2 mark 2", "A2", {1}},
                                        {"A3 mark 2", "A3", {1}},
                                        {"A1 mark 1", "A1", {0}},
                                        {"A1xA1 marks 1,2", "A1xA1", {0, 1}},
                                        {"C2 long root marked", "C2", {1}}};
    return f;
}

hcpair::HCPairSpec make_pair(const Fixture& f) {
    return hcpair::build_pair(RootSystem(CartanMatrix::parse(f.type)), f.marks);
}

json labels(const std::vector<Root>& roots) {
    json j = json::array();
    for (const auto& r : roots) j.push_back(r.label());
    return j;
}

bool quick(const VerifyOptions& o) { return o.profile == Profile::quick; }

// Deterministic stream per (seed, purpose).
std::mt19937_64 rng_for(const VerifyOptions& o, std::uint64_t purpose) {
    std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                      static_cast<std::uint32_t>(purpose)};
    return std::mt19937_64(seq);
}

long uniform(std::mt19937_64& rng, long lo, long hi) {
    // Portable across standard libraries, unlike uniform_int_distribution.
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

CriterionResult c1_a2_admissibility(const VerifyOptions&) {
    CriterionResult r{1, "A2 admissibility fixture"};
    auto pair = hcpair::build_pair(RootSystem(CartanMatrix::parse("A2")), {1});
    const auto& rs = pair.rs();
    const Root a{std::vector<int>{1, 0}}, b{std::vector<int>{0, 1}}, ab{std::vector<int>{1, 1}};
    auto p = PositiveSystem::standard(rs);
    auto p_prime = PositiveSystem::of_full(rs, {ab, -b, a});
    auto pt = hcpair::totally_positive_roots(pair, p);
    auto pt_prime = hcpair::totally_positive_roots(pair, p_prime);
    const bool p_adm = hcpair::is_admissible(pair, p), pp_adm = hcpair::is_admissible(pair, p_prime);
    json listing = json::array();
    std::size_t admissible = 0;
    for (const auto& q : rootsys::all_positive_systems(rs)) {
        if (!q.contains_all(pair.standard_compact().roots())) continue;
        bool adm = hcpair::is_admissible(pair, q);
        admissible += adm;
        listing.push_back(
            {{"roots", labels(q.roots())}, {"admissible", adm}, {"P_t", labels(hcpair::totally_positive_roots(pair, q))}});
    }
    r.details = {{"P", labels(p.roots())},          {"P_admissible", p_adm},
                 {"P_t", labels(pt)},               {"P_prime", labels(p_prime.roots())},
                 {"P_prime_admissible", pp_adm},    {"P_prime_t", labels(pt_prime)},
                 {"systems_containing_P_k", listing}, {"admissible_count", admissible}};
    r.passed = p_adm && std::set<Root>(pt.begin(), pt.end()) == std::set<Root>{b, ab} && !pp_adm && admissible == 2;
    return r;
}

CriterionResult c2_structure(const VerifyOptions&) {
    CriterionResult r{2, "structure of admissible systems"};
    r.passed = true;
    json out = json::array();
    for (const auto& f : fixtures()) {
        if (std::string(f.type) != "A2" && std::string(f.type) != "A3" && std::string(f.type) != "A1") continue;
        auto pair = make_pair(f);
        auto report = hcpair::ideal_decomposition(pair, PositiveSystem::standard(pair.rs()));
        auto v = hcpair::verify_theorem3(pair, report);
        json checks = json::object();
        for (const auto& c : v.checks) checks[c.name] = c.passed;
        bool ok = v.holds;
        for (const char* name : {"rank_r_plus_s", "unique_noncompact_decomposition", "p_plus_abelian"}) {
            const auto* c = v.find(name);
            ok = ok && c && c->passed;
        }
        r.passed = r.passed && ok;
        out.push_back({{"fixture", f.name},
                       {"rank", pair.rs().rank()},
                       {"r", report.compact_simple.size()},
                       {"s", report.center_dim_s},
                       {"lowest_roots", labels(report.lowest_roots)},
                       {"checks", checks},
                       {"passed", ok}});
    }
    r.details = {{"fixtures", out}};
    return r;
}

CriterionResult c3_admissible_count(const VerifyOptions&) {
    CriterionResult r{3, "admissible system count 2^s"};
    r.passed = true;
    json out = json::array();
    for (const auto& f : fixtures()) {
        auto pair = make_pair(f);
        auto pk = pair.standard_compact();
        const std::size_t s = pair.hermitian_components().size();
        const std::size_t count = hcpair::enumerate_admissible(pair, pk).size();
        const std::size_t oracle = hcpair::brute_force_admissible(pair, pk).size();
        const bool ok = count == (std::size_t{1} << s) && count == oracle;
        r.passed = r.passed && ok;
        out.push_back({{"fixture", f.name}, {"s", s}, {"count", count}, {"brute_force_count", oracle}, {"passed", ok}});
    }
    r.details = {{"fixtures", out}};
    return r;
}

CriterionResult c4_multiplicity_oracle(const VerifyOptions& o) {
    CriterionResult r{4, "multiplicity formula vs brute force"};
    const long depth = quick(o) ? 6 : 10;
    struct Case {
        std::size_t fixture;
        std::size_t system;
        Weight lambda;
    };
    std::vector<hcpair::HCPairSpec> pairs;
    std::vector<std::vector<PositiveSystem>> systems;
    std::vector<Case> cases;
    auto rng = rng_for(o, 4);
    for (std::size_t fi = 0; fi < fixtures().size(); ++fi) {
        pairs.push_back(make_pair(fixtures()[fi]));
        const auto& pair = pairs.back();
        const auto& rs = pair.rs();
        systems.push_back(hcpair::enumerate_admissible(pair, pair.standard_compact()));
        const auto& pk = pair.standard_compact();
        std::vector<Weight> lambdas{Weight::zero(rs.rank()), pk.half_sum(), pk.half_sum() * Rational(2)};
        for (int found = 0, tries = 0; found < 2 && tries < 10000; ++tries) {
            std::vector<long> c(rs.rank());
            for (auto& x : c) x = uniform(rng, -3, 3);
            Weight l = Weight::from_ints(c);
            if (hwmod::is_dominant_integral(rs, pk, l) && !l.is_zero()) {
                lambdas.push_back(l);
                ++found;
            }
        }
        for (std::size_t si = 0; si < systems.back().size(); ++si)
            for (const auto& l : lambdas) cases.push_back({fi, si, l});
    }
    std::vector<hwmod::OracleComparison> cmp(cases.size());
    parallel_for(cases.size(), o.threads, [&](std::size_t i) {
        const auto& c = cases[i];
        hwmod::UModule m(pairs[c.fixture], systems[c.fixture][c.system], c.lambda);
        cmp[i] = hwmod::compare_with_oracle(m, depth);
    });
    r.passed = !cases.empty();
    json out = json::array();
    std::size_t weights = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        weights += cmp[i].weights_checked;
        r.passed = r.passed && cmp[i].agree() && cmp[i].weights_checked > 0;
        json entry = {{"fixture", fixtures()[cases[i].fixture].name},
                      {"positive_system", labels(systems[cases[i].fixture][cases[i].system].roots())},
                      {"lambda", cases[i].lambda.to_string()},
                      {"weights_checked", cmp[i].weights_checked},
                      {"agree", cmp[i].agree()}};
        if (!cmp[i].agree()) entry["first_mismatch"] = cmp[i].mismatches.front();
        out.push_back(entry);
    }
    r.details = {{"depth", depth}, {"cases", out}, {"total_weights_checked", weights}};
    return r;
}

CriterionResult c5_partition_formula(const VerifyOptions&) {
    CriterionResult r{5, "partition DP vs exhaustive count over all positive roots"};
    RootSystem rs(CartanMatrix::parse("A2"));
    auto p = PositiveSystem::standard(rs);
    hwmod::PartitionFunctionCache cache(p.roots(), p);
    const auto h = hwmod::integral_height(p);
    const int max_height = 8;
    std::size_t checked = 0, mismatches = 0;
    json values = json::object();
    for (int m = 0; m <= max_height; ++m)
        for (int n = 0; m + n <= max_height; ++n) {
            Root d{std::vector<int>{m, n}};
            BigInt dp = cache.count(d), brute = hwmod::exhaustive_partition_count(p.roots(), h, d);
            ++checked;
            if (dp != brute) ++mismatches;
            values[d.label()] = dp.get_str();
        }
    r.passed = mismatches == 0;
    r.details = {{"max_height", max_height}, {"checked", checked}, {"mismatches", mismatches}, {"values", values}};
    return r;
}

CriterionResult c6_harish_chandra(const VerifyOptions& o) {
    CriterionResult r{6, "beta of the Casimir certified by the Verma action"};
    const long depth = quick(o) ? 5 : 8;
    const int samples = quick(o) ? 10 : 25;
    r.passed = true;
    json out = json::array();
    for (std::size_t n : {2u, 3u}) {
        uea::PBWAlgebra alg(uea::StructureConstants::builtin_sl(n));
        auto cas = uea::casimir(alg);
        auto action = uea::verma_action(alg, cas.element, depth);
        auto beta = uea::beta_projection(alg, cas.element);
        auto rng = rng_for(o, 60 + n);
        std::vector<Weight> lambdas;
        std::size_t scalar_ok = 0;
        for (int k = 0; k < samples; ++k) {
            std::vector<long> c(n - 1);
            for (auto& x : c) x = uniform(rng, -6, 6);
            Weight l = Weight::from_ints(c);
            lambdas.push_back(l);
            const Rational chi = beta.evaluate(l.coords());
            auto m = action.at(l);
            bool ok = true;
            for (std::size_t i = 0; i < m.rows() && ok; ++i)
                for (std::size_t j = 0; j < m.cols() && ok; ++j) ok = m(i, j) == (i == j ? chi : Rational(0));
            scalar_ok += ok;
        }
        auto inv = uea::gamma_invariance_check(alg, cas.element, rootsys::weyl_group(alg.rs()), lambdas);
        const bool ok = scalar_ok == lambdas.size() && inv.holds;
        r.passed = r.passed && ok;
        out.push_back({{"algebra", "sl" + std::to_string(n)},
                       {"verma_basis_size", action.basis.size()},
                       {"lambdas", lambdas.size()},
                       {"scalar_action_matches_beta", scalar_ok},
                       {"beta", beta.to_string(uea::cartan_variable_names(alg.rs()))},
                       {"gamma_invariant", inv.holds},
                       {"passed", ok}});
        if (n == 2) r.details["normalization"] = cas.normalization;
    }
    r.details["depth"] = depth;
    r.details["algebras"] = out;
    return r;
}

CriterionResult c7_orbit_characters(const VerifyOptions& o) {
    CriterionResult r{7, "characters agree on dot orbits"};
    r.passed = true;
    json out = json::array();
    for (std::size_t n : {2u, 3u}) {
        uea::PBWAlgebra alg(uea::StructureConstants::builtin_sl(n));
        auto omega = uea::casimir(alg).element;
        auto beta = uea::beta_projection(alg, omega);
        const auto& rs = alg.rs();
        auto w = rootsys::weyl_group(rs);
        const long bound = n == 2 ? 3 : (quick(o) ? 2 : 3);
        std::vector<Weight> grid;
        std::vector<long> c(rs.rank(), -bound);
        for (;;) {
            grid.push_back(Weight::from_ints(c));
            std::size_t i = 0;
            while (i < c.size() && ++c[i] > bound) c[i++] = -bound;
            if (i == c.size()) break;
        }
        std::size_t pairs = 0, equal = 0, violations = 0;
        for (const auto& l : grid)
            for (const auto& m : grid) {
                ++pairs;
                if (!hwmod::infinitesimal_character_equal(rs, w, l, m).equal) continue;
                ++equal;
                if (beta.evaluate(l.coords()) != beta.evaluate(m.coords())) ++violations;
            }
        const bool ok = violations == 0 && equal > grid.size();
        r.passed = r.passed && ok;
        out.push_back({{"algebra", "sl" + std::to_string(n)},
                       {"grid_points", grid.size()},
                       {"pairs", pairs},
                       {"orbit_equal_pairs", equal},
                       {"violations", violations},
                       {"passed", ok}});
    }
    r.details = {{"algebras", out}};
    return r;
}

CriterionResult c8_duflo_sl2(const VerifyOptions&) {
    CriterionResult r{8, "Duflo criterion on sl2"};
    RootSystem rs(CartanMatrix::parse("A1"));
    auto p = PositiveSystem::standard(rs);
    auto pair = hcpair::build_pair(rs, {0});
    r.passed = true;
    json rows = json::array();
    for (long n = -5; n <= 5; ++n) {
        Weight l = Weight::from_ints({n});
        const bool irreducible = hwmod::duflo_criterion(rs, p, l).holds;
        const long shifted = n + 1;
        const bool expected_reducible = shifted >= 1 && shifted <= 6;
        const bool ok = irreducible == !expected_reducible;
        r.passed = r.passed && ok;
        rows.push_back({{"lambda", n},
                        {"lambda_plus_delta", shifted},
                        {"verma_irreducible", irreducible},
                        {"sufficient_condition", hwmod::irreducibility_sufficient(pair, p, l).holds},
                        {"consistent", ok}});
    }
    r.details = {{"rows", rows}};
    return r;
}

CriterionResult c9_trivial_unitary(const VerifyOptions&) {
    CriterionResult r{9, "only the trivial finite-dimensional module passes unitarity"};
    const int box = 5;
    r.passed = true;
    json out = json::array();
    for (const auto& f : fixtures()) {
        auto pair = make_pair(f);
        for (const auto& p : hcpair::enumerate_admissible(pair, pair.standard_compact())) {
            auto v = hwmod::trivial_unitary_scan(pair, p, box);
            r.passed = r.passed && v.holds;
            out.push_back({{"fixture", f.name},
                           {"positive_system", labels(p.roots())},
                           {"holds", v.holds},
                           {"notes", v.notes}});
        }
    }
    r.details = {{"box", box}, {"scans", out}};
    return r;
}

json inclusion_json(const hccell::InclusionStats& s) {
    return {{"samples", s.samples},
            {"inside", s.inside},
            {"outside", s.outside},
            {"residual_exceeded", s.residual_exceeded},
            {"min_residual", s.min_residual},
            {"median_residual", s.median_residual},
            {"p90_residual", s.p90_residual},
            {"p99_residual", s.p99_residual},
            {"max_residual", s.max_residual},
            {"min_abs_det_a", s.min_det_a},
            {"max_form_defect", s.max_form_defect},
            {"failures", s.failures}};
}

CriterionResult c10_big_cell(const VerifyOptions& o) {
    CriterionResult r{10, "G0 B+ lies in the big cell"};
    const std::size_t n11 = quick(o) ? 200 : 1000, n22 = quick(o) ? 100 : 500;
    auto a = hccell::verify_inclusion({1, 1, o.seed}, n11, {1e-10, 1e-8}, o.threads);
    auto b = hccell::verify_inclusion({2, 2, o.seed}, n22, {1e-9, 1e-8}, o.threads);
    r.passed = a.holds() && b.holds() && a.outside == 0 && b.outside == 0;
    r.details = {{"su11", inclusion_json(a)}, {"su22", inclusion_json(b)}, {"tol_su11", 1e-10}, {"tol_su22", 1e-9}};
    return r;
}

CriterionResult c11_psi(const VerifyOptions& o) {
    CriterionResult r{11, "psi extends the character and is B+-equivariant"};
    const std::size_t n = quick(o) ? 50 : 200;
    r.passed = true;
    json out = json::array();
    for (int m : {1, 2}) {
        auto s = hccell::verify_psi({1, 1, o.seed}, m, n, o.threads);
        const bool ok = s.outside == 0 && s.max_extension_residual <= 1e-10 && s.max_equivariance_residual <= 1e-9;
        r.passed = r.passed && ok;
        out.push_back({{"m", m},
                       {"samples", s.samples},
                       {"outside", s.outside},
                       {"max_extension_residual", s.max_extension_residual},
                       {"max_equivariance_residual", s.max_equivariance_residual},
                       {"passed", ok}});
    }
    r.details = {{"runs", out}};
    return r;
}

CriterionResult c12_determinism(const VerifyOptions& o) {
    CriterionResult r{12, "quick profile is deterministic"};
    VerifyOptions q = o;
    q.profile = Profile::quick;
    std::string dumps[2];
    for (auto& d : dumps) {
        std::vector<CriterionResult> results;
        for (int id = 1; id < kCriterionCount; ++id) results.push_back(run_criterion(id, q));
        d = results_payload(q, results).dump();
    }
    r.passed = dumps[0] == dumps[1];
    r.details = {{"digest_first", fnv1a_hex(dumps[0])},
                 {"digest_second", fnv1a_hex(dumps[1])},
                 {"bytes", dumps[0].size()},
                 {"identical", r.passed}};
    return r;
}

const double kBudget[kCriterionCount] = {1, 1, 1, 30, 5, 30, 10, 1, 5, 60, 10, 120};

}  // namespace

Profile parse_profile(const std::string& s) {
    if (s == "quick") return Profile::quick;
    if (s == "full") return Profile::full;
    throw InvalidInput("profile must be quick or full, got '" + s + "'");
}

std::string to_string(Profile p) { return p == Profile::quick ? "quick" : "full"; }

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
    using Fn = CriterionResult (*)(const VerifyOptions&);
    static const Fn table[kCriterionCount] = {c1_a2_admissibility, c2_structure,        c3_admissible_count,
                                              c4_multiplicity_oracle, c5_partition_formula, c6_harish_chandra,
                                              c7_orbit_characters, c8_duflo_sl2,       c9_trivial_unitary,
                                              c10_big_cell,        c11_psi,            c12_determinism};
    if (id < 1 || id > kCriterionCount) throw InvalidInput("criterion id out of range");
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = table[id - 1](opts);
    } catch (const std::exception& e) {
        r = CriterionResult{id, "criterion " + std::to_string(id)};
        r.passed = false;
        r.details = {{"error", e.what()}};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.budget_seconds = kBudget[id - 1];
    return r;
}

std::vector<CriterionResult> run_all(const VerifyOptions& opts) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
    return out;
}

nlohmann::json results_payload(const VerifyOptions& opts, const std::vector<CriterionResult>& results) {
    json criteria = json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"details", r.details}});
    }
    return {{"profile", to_string(opts.profile)}, {"seed", opts.seed}, {"criteria", criteria}, {"all_passed", all}};
}

nlohmann::json timing_payload(const std::vector<CriterionResult>& results) {
    json per = json::array();
    double total = 0;
    for (const auto& r : results) {
        total += r.seconds;
        per.push_back({{"id", r.id}, {"seconds", r.seconds}, {"budget_seconds", r.budget_seconds}});
    }
    return {{"total_seconds", total}, {"criteria", per}};
}

}  // namespace hcrep::verify
