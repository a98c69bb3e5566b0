#include "hcrep/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "hcrep/cli/serialize.hpp"
#include "hcrep/digest.hpp"
#include "hcrep/error.hpp"
#include "hcrep/hwmod/criteria.hpp"
#include "hcrep/hwmod/umodule.hpp"
#include "hcrep/rootsys/weyl.hpp"
#include "hcrep/uea/center.hpp"
#include "hcrep/uea/expr.hpp"
#include "hcrep/verify/verify.hpp"

#ifndef HCREP_VERSION
#define HCREP_VERSION "0.0.0"
#endif

namespace hcrep::cli {

namespace {

using rootsys::CartanMatrix;
using rootsys::PositiveSystem;
using rootsys::Weight;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RootInput {
    std::string type;
    int rank = 0;
    std::string cartan_path;

    void add_to(CLI::App* sub) {
        sub->add_option("--type", type, "Cartan type letter (A-G) with --rank, or a full type such as A2 or A1xA1");
        sub->add_option("--rank", rank, "rank for a single-letter --type")->check(CLI::Range(1, 8));
        sub->add_option("--cartan", cartan_path, "JSON file with a Cartan matrix")->check(CLI::ExistingFile);
    }

    RootSystem build() const {
        if (!cartan_path.empty()) {
            if (!type.empty()) throw InvalidInput("give either --cartan or --type, not both");
            json j;
            try {
                j = json::parse(read_file(cartan_path));
            } catch (const json::parse_error& e) {
                throw InvalidInput(cartan_path + ": " + e.what());
            }
            return RootSystem(cartan_from_json(j));
        }
        if (type.empty()) throw InvalidInput("a root system is required: --type/--rank or --cartan");
        if (rank > 0) {
            if (type.size() != 1) throw InvalidInput("--rank needs a single type letter, got '" + type + "'");
            return RootSystem(CartanMatrix::of_type(static_cast<char>(std::toupper(type[0])), rank));
        }
        return RootSystem(CartanMatrix::parse(type));
    }
};

std::vector<std::size_t> parse_marks(const RootSystem& rs, const std::string& text) {
    std::vector<std::size_t> marks;
    for (const auto& q : parse_rational_list(text)) {
        if (!is_integer(q) || q < 1 || q > static_cast<long>(rs.rank()))
            throw InvalidInput("marks are 1-based simple-root indices in 1.." + std::to_string(rs.rank()));
        marks.push_back(static_cast<std::size_t>(to_long(q) - 1));
    }
    return marks;
}

Weight parse_weight(const RootSystem& rs, const std::string& text, const char* what) {
    auto c = parse_rational_list(text);
    if (c.size() != rs.rank())
        throw InvalidInput(std::string(what) + " needs " + std::to_string(rs.rank()) + " coordinates, got " +
                           std::to_string(c.size()));
    return Weight(std::move(c));
}

// Report for one positive system of a pair; verdicts only when admissible.
json analyze_system(const hcpair::HCPairSpec& pair, const PositiveSystem& p, bool& verdicts_hold) {
    auto report = hcpair::ideal_decomposition(pair, p);
    json j = {{"roots", labels_json(p.roots())}, {"admissible", report.admissible}, {"p_t", labels_json(report.totally_positive)}};
    if (!report.admissible) return j;
    json summands = json::array();
    for (const auto& s : report.summands) summands.push_back(labels_json(s));
    auto t3 = hcpair::verify_theorem3(pair, report);
    auto chain = hcpair::chain_length_check(pair, report.totally_positive);
    verdicts_hold = verdicts_hold && t3.holds && chain.holds;
    j["s"] = report.center_dim_s;
    j["gt_rank"] = report.gt_rank;
    j["compact_simple_roots"] = labels_json(report.compact_simple);
    j["lowest_roots"] = labels_json(report.lowest_roots);
    j["summands"] = summands;
    j["fully_admissible"] = hcpair::is_fully_admissible(pair, p);
    j["verdicts"] = {{"structure", verdict_json(t3)}, {"chain_length", verdict_json(chain)}};
    return j;
}

PositiveSystem choose_system(const hcpair::HCPairSpec& pair, const std::string& positive) {
    if (!positive.empty()) return parse_positive_system(pair.rs(), positive);
    auto standard = PositiveSystem::standard(pair.rs());
    if (hcpair::is_admissible(pair, standard)) return standard;
    auto all = hcpair::enumerate_admissible(pair, pair.standard_compact());
    if (all.empty()) throw InvalidInput("the marking admits no admissible positive system");
    return all.front();
}

struct Result {
    json results;
    int exit_code = kExitOk;
    std::vector<std::string> failures;
};

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1])});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::string suggestion(const CLI::App& app, const std::vector<std::string>& extras) {
    std::vector<std::string> names;
    auto collect = [&](const CLI::App* a) {
        for (const auto* o : a->get_options())
            for (const auto& l : o->get_lnames()) names.push_back("--" + l);
    };
    collect(&app);
    for (const auto* sub : app.get_subcommands({})) {
        names.push_back(sub->get_name());
        if (sub->parsed()) collect(sub);
    }
    std::string best;
    std::size_t best_d = 4;
    for (const auto& e : extras) {
        std::string key = e.substr(0, e.find('='));
        for (const auto& n : names)
            if (auto d = edit_distance(key, n); d < best_d) {
                best_d = d;
                best = n;
            }
    }
    return best;
}

void flatten(const json& j, const std::string& path, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else if (j.is_array()) {
        os << path << ": ";
        for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
        os << '\n';
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

std::string render_table(const std::string& command, const json& report) {
    std::ostringstream os;
    const json& r = report.at("results");
    if (command == "roots") {
        os << "rank " << r["rank"] << ", " << r["root_count"] << " roots (" << r["positive_root_count"]
           << " positive), delta = " << r["delta"].get<std::string>() << '\n';
        os << "label        height  coefficients\n";
        for (const auto& root : r["roots"]) {
            std::string label = root["label"];
            os << label << std::string(label.size() < 13 ? 13 - label.size() : 1, ' ') << root["height"];
            std::string h = root["height"].dump();
            os << std::string(h.size() < 8 ? 8 - h.size() : 1, ' ') << root["coefficients"].dump() << '\n';
        }
    } else if (command == "verify-paper") {
        for (const auto& c : r["criteria"])
            os << "criterion " << c["id"] << ": " << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "  "
               << c["name"].get<std::string>() << '\n';
        os << (r["all_passed"].get<bool>() ? "all criteria passed" : "some criteria failed") << '\n';
    } else {
        flatten(r, "", os);
    }
    return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Harish-Chandra highest-weight representation toolkit", "hcrep"};
    app.set_version_flag("--version", std::string(HCREP_VERSION));
    app.require_subcommand(1);
    // Subcommands copy this setting when created, so global flags may follow them.
    app.fallthrough();

    std::string format = "json", output;
    unsigned threads = 0;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--output", output, "write the report to a file instead of stdout");
    app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)")
        ->envname("HCREP_THREADS")
        ->check(CLI::Range(0u, 1024u));

    RootInput roots_in, pair_in, mult_in, crit_in, orbit_in;
    std::string marks, positive, lambda, mu;
    int depth = -1, scan = 0;
    bool classify = false, oracle = false;

    auto* roots_cmd = app.add_subcommand("roots", "root system data");
    roots_in.add_to(roots_cmd);

    auto* pair_cmd = app.add_subcommand("pair", "compact/noncompact grading and admissible positive systems");
    pair_in.add_to(pair_cmd);
    pair_cmd->add_option("--mark", marks, "1-based marked simple roots, e.g. 2 or 1,3")->required();
    pair_cmd->add_option("--positive", positive, "positive system as root labels, e.g. a,b,a+b");
    pair_cmd->add_flag("--classify", classify, "list every positive system containing P_k and verify each admissible one");

    auto* mult_cmd = app.add_subcommand("mult", "weight multiplicities of the universal highest-weight module");
    mult_in.add_to(mult_cmd);
    mult_cmd->add_option("--mark", marks, "1-based marked simple roots")->required();
    mult_cmd->add_option("--positive", positive, "admissible positive system as root labels");
    mult_cmd->add_option("--lambda", lambda, "highest weight, fundamental coordinates")->required();
    mult_cmd->add_option("--mu", mu, "weight to query");
    mult_cmd->add_option("--depth", depth, "list every weight down to this height")->check(CLI::Range(0, 30));
    mult_cmd->add_flag("--oracle", oracle, "count PBW monomials instead of using the partition formula");

    auto* crit_cmd = app.add_subcommand("criteria", "irreducibility, Verma irreducibility and unitarity tests");
    crit_in.add_to(crit_cmd);
    crit_cmd->add_option("--mark", marks, "1-based marked simple roots")->required();
    crit_cmd->add_option("--positive", positive, "admissible positive system as root labels");
    crit_cmd->add_option("--lambda", lambda, "weight, fundamental coordinates")->required();
    crit_cmd->add_option("--scan", scan, "also scan integral weights in [-BOX, BOX]")->check(CLI::Range(1, 20));

    auto* orbit_cmd = app.add_subcommand("charorbit", "compare infinitesimal characters via dot orbits");
    orbit_in.add_to(orbit_cmd);
    orbit_cmd->add_option("--lambda", lambda, "first weight")->required();
    orbit_cmd->add_option("--mu", mu, "second weight")->required();

    std::string algebra = "sl2", expr;
    bool beta = false, want_casimir = false, chi = false;
    auto* uea_cmd = app.add_subcommand("uea", "PBW normal forms, Harish-Chandra projection and the Casimir");
    uea_cmd->add_option("--algebra", algebra, "sl2..sl8 or @file.json with structure constants");
    uea_cmd->add_option("--expr", expr, "expression such as E(a)*F(a)*F(a)");
    uea_cmd->add_flag("--beta", beta, "projection of the expression to U(h)");
    uea_cmd->add_flag("--casimir", want_casimir, "quadratic Casimir and its normalization");
    uea_cmd->add_flag("--chi", chi, "infinitesimal character at --lambda");
    uea_cmd->add_option("--lambda", lambda, "weight for --chi");

    std::string pq = "1,1";
    std::size_t samples = 1000;
    std::uint64_t seed = 42;
    double tol = 1e-10;
    int m = 0;
    auto* cell_cmd = app.add_subcommand("cell", "sampled check of the big-cell factorization for SU(p,q)");
    cell_cmd->add_option("--pq", pq, "signature p,q");
    cell_cmd->add_option("--samples", samples, "number of samples")->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    cell_cmd->add_option("--seed", seed, "sampling seed");
    cell_cmd->add_option("--tol", tol, "reconstruction tolerance")->check(CLI::Range(1e-15, 1e-2));
    auto* m_opt = cell_cmd->add_option("--m", m, "also check psi for the character det^-m")->check(CLI::Range(-20, 20));

    std::string profile = "quick";
    auto* verify_cmd = app.add_subcommand("verify-paper", "run the acceptance criteria");
    verify_cmd->add_option("--profile", profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--seed", seed, "seed for sampled criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        std::vector<std::string> extras = app.remaining();
        for (const auto* sub : app.get_subcommands())
            for (const auto& x : sub->remaining()) extras.push_back(x);
        if (extras.empty()) {
            app.exit(e, out, err);
        } else {
            err << "unrecognized arguments:";
            for (const auto& x : extras) err << ' ' << x;
            err << '\n';
            if (auto s = suggestion(app, extras); !s.empty()) err << "did you mean " << s << "?\n";
            err << "Run with --help for more information.\n";
        }
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    json arguments = json::object();
    json digest_input = json::object();
    auto record = [&](const CLI::App* a) {
        for (const auto* o : a->get_options()) {
            if (o->count() == 0 || o->get_lnames().empty()) continue;
            const auto& name = o->get_lnames().front();
            const auto& res = o->results();
            json v = res.size() == 1 ? json(res.front()) : json(res);
            arguments[name] = v;
            if (name != "output" && name != "format" && name != "threads") digest_input[name] = v;
        }
    };
    record(&app);
    record(sub);

    const auto start = std::chrono::steady_clock::now();
    Result result;
    json timing = json::object();
    std::string digest_extra;
    try {
        if (command == "roots") {
            if (!roots_in.cartan_path.empty()) digest_extra = read_file(roots_in.cartan_path);
            result.results = root_system_json(roots_in.build());
        } else if (command == "pair") {
            if (!pair_in.cartan_path.empty()) digest_extra = read_file(pair_in.cartan_path);
            RootSystem rs = pair_in.build();
            auto mark_list = parse_marks(rs, marks);
            auto pair = hcpair::build_pair(rs, mark_list);
            for (auto& i : mark_list) ++i;
            json ladders = json::array();
            for (const auto& l : pair.ladder_components()) ladders.push_back(labels_json(l));
            bool hold = true;
            json r = {{"rank", rs.rank()},
                      {"cartan", rs.cartan().entries()},
                      {"marks", mark_list},
                      {"compact_roots", labels_json(pair.compact_roots())},
                      {"noncompact_roots", labels_json(pair.noncompact_roots())},
                      {"ladder_components", ladders},
                      {"center_dimension", pair.center_dimension()},
                      {"s", pair.hermitian_components().size()},
                      {"hermitian_components", pair.hermitian_components()},
                      {"nonhermitian_components", pair.nonhermitian_components()},
                      {"multi_mark_components", pair.multi_mark_components()}};
            const auto p = positive.empty() ? PositiveSystem::standard(rs) : parse_positive_system(rs, positive);
            r["positive_system"] = analyze_system(pair, p, hold);
            if (classify) {
                const auto pk = pair.standard_compact();
                json systems = json::array();
                for (const auto& q : rootsys::all_positive_systems(rs))
                    if (q.contains_all(pk.roots())) {
                        systems.push_back({{"roots", labels_json(q.roots())},
                                           {"admissible", hcpair::is_admissible(pair, q)},
                                           {"p_t", labels_json(hcpair::totally_positive_roots(pair, q))}});
                    }
                json admissible = json::array();
                for (const auto& q : hcpair::enumerate_admissible(pair, pk)) admissible.push_back(analyze_system(pair, q, hold));
                r["compact_positive_roots"] = labels_json(pk.roots());
                r["systems_containing_p_k"] = systems;
                r["admissible_systems"] = admissible;
                r["admissible_count"] = admissible.size();
            }
            if (!hold) {
                result.exit_code = kExitVerdictFailed;
                result.failures.push_back("a structure verdict failed on an admissible system");
            }
            result.results = r;
        } else if (command == "mult") {
            if (!mult_in.cartan_path.empty()) digest_extra = read_file(mult_in.cartan_path);
            if (mu.empty() && depth < 0) throw InvalidInput("mult needs --mu or --depth");
            RootSystem rs = mult_in.build();
            auto pair = hcpair::build_pair(rs, parse_marks(rs, marks));
            hwmod::UModule module(pair, choose_system(pair, positive), parse_weight(rs, lambda, "--lambda"));
            json r = {{"positive_system", labels_json(module.positive_system().roots())},
                      {"p_t", labels_json(module.generators())},
                      {"lambda", module.highest_weight().to_string()},
                      {"finite_part", {{"dimension", module.finite_part().dimension().get_str()},
                                       {"weight_count", module.finite_part().weights.size()}}},
                      {"covers_p", module.covers_p()},
                      {"method", oracle ? "oracle" : "formula"}};
            if (!mu.empty()) {
                Weight w = parse_weight(rs, mu, "--mu");
                auto d = module.depth(w);
                BigInt value = 0;
                if (d && *d >= 0) {
                    if (*d > 40) throw BoundExceeded("depth " + std::to_string(*d) + " exceeds 40", 0);
                    if (oracle) {
                        auto table = module.brute_force(*d);
                        if (auto it = table.find(w); it != table.end()) value = it->second;
                    } else {
                        value = module.multiplicity(w);
                    }
                }
                r["mu"] = w.to_string();
                r["depth"] = d ? json(*d) : json(nullptr);
                r["multiplicity"] = value.get_str();
            }
            if (depth >= 0) {
                std::map<Weight, BigInt> table;
                if (oracle) table = module.brute_force(depth);
                json weights = json::array();
                for (const auto& w : module.weights_within(depth)) {
                    BigInt value = oracle ? (table.count(w) ? table[w] : BigInt(0)) : module.multiplicity(w);
                    weights.push_back({{"weight", w.to_string()}, {"depth", *module.depth(w)}, {"multiplicity", value.get_str()}});
                }
                r["max_depth"] = depth;
                r["weights"] = weights;
            }
            result.results = r;
        } else if (command == "criteria") {
            if (!crit_in.cartan_path.empty()) digest_extra = read_file(crit_in.cartan_path);
            RootSystem rs = crit_in.build();
            auto pair = hcpair::build_pair(rs, parse_marks(rs, marks));
            auto p = choose_system(pair, positive);
            Weight l = parse_weight(rs, lambda, "--lambda");
            json r = {{"positive_system", labels_json(p.roots())},
                      {"lambda", l.to_string()},
                      {"irreducibility_sufficient", verdict_json(hwmod::irreducibility_sufficient(pair, p, l))},
                      {"verma_irreducible", verdict_json(hwmod::duflo_criterion(rs, p, l))},
                      {"unitarity_necessary", verdict_json(hwmod::unitarity_necessary(pair, p, l))}};
            if (scan > 0) {
                auto v = hwmod::trivial_unitary_scan(pair, p, scan);
                r["trivial_unitary_scan"] = verdict_json(v);
                r["scan_box"] = scan;
                if (!v.holds) {
                    result.exit_code = kExitVerdictFailed;
                    result.failures.push_back("a nontrivial weight passed the unitarity scan");
                }
            }
            result.results = r;
        } else if (command == "charorbit") {
            if (!orbit_in.cartan_path.empty()) digest_extra = read_file(orbit_in.cartan_path);
            RootSystem rs = orbit_in.build();
            Weight l = parse_weight(rs, lambda, "--lambda"), w = parse_weight(rs, mu, "--mu");
            auto match = hwmod::infinitesimal_character_equal(rs, l, w);
            json word = json::array();
            for (auto i : match.word) word.push_back(i + 1);
            result.results = {{"lambda", l.to_string()},
                              {"mu", w.to_string()},
                              {"equal", match.equal},
                              {"word", word},
                              {"dominant_lambda_plus_delta", rootsys::dominant_representative(rs, l + rs.delta()).to_string()},
                              {"dominant_mu_plus_delta", rootsys::dominant_representative(rs, w + rs.delta()).to_string()}};
        } else if (command == "uea") {
            if (!algebra.empty() && algebra[0] == '@') digest_extra = read_file(algebra.substr(1));
            uea::PBWAlgebra alg(uea::StructureConstants::load(algebra));
            const auto& sc = alg.constants();
            std::vector<std::string> basis;
            for (std::size_t i = 0; i < sc.dim(); ++i) basis.push_back(sc.label(i));
            const auto names = uea::cartan_variable_names(alg.rs());
            json r = {{"algebra", sc.description()}, {"dimension", sc.dim()}, {"rank", sc.rank()}, {"basis", basis}};
            std::optional<uea::Element> target;
            if (!expr.empty()) {
                auto e = uea::parse_expression(alg, expr);
                auto wt = alg.weight_of(e);
                json je = {{"input", expr},
                           {"normal_form", alg.to_string(e)},
                           {"terms", e.terms().size()},
                           {"weight", wt ? json(wt->label()) : json(nullptr)},
                           {"central", uea::is_central(alg, e)}};
                if (beta) je["beta"] = uea::beta_projection(alg, e).to_string(names);
                r["expression"] = je;
                target = e;
            } else if (beta) {
                throw InvalidInput("--beta needs --expr");
            }
            if (want_casimir || (chi && !target)) {
                auto c = uea::casimir(alg);
                json scale = json::array();
                for (const auto& s : c.scale) scale.push_back(to_string(s));
                r["casimir"] = {{"element", alg.to_string(c.element)},
                                {"normalization", c.normalization},
                                {"scale", scale},
                                {"beta", uea::beta_projection(alg, c.element).to_string(names)},
                                {"gamma", uea::gamma_polynomial(alg, c.element).to_string(names)}};
                if (!target) target = c.element;
            }
            if (chi) {
                if (lambda.empty()) throw InvalidInput("--chi needs --lambda");
                Weight l = parse_weight(alg.rs(), lambda, "--lambda");
                r["chi"] = {{"lambda", l.to_string()},
                            {"of", expr.empty() ? "casimir" : "expression"},
                            {"value", to_string(uea::infinitesimal_character(alg, *target, l))}};
            } else if (!lambda.empty()) {
                throw InvalidInput("--lambda is only used with --chi");
            }
            result.results = r;
        } else if (command == "cell") {
            auto sig = parse_rational_list(pq);
            if (sig.size() != 2 || !is_integer(sig[0]) || !is_integer(sig[1]) || sig[0] < 1 || sig[1] < 1 ||
                sig[0] + sig[1] > 12)
                throw InvalidInput("--pq must be p,q with p,q >= 1 and p+q <= 12");
            const int p = static_cast<int>(to_long(sig[0])), q = static_cast<int>(to_long(sig[1]));
            hccell::GroupSampler sampler{p, q, seed};
            hccell::CellOptions opts;
            opts.tol = tol;
            auto stats = hccell::verify_inclusion(sampler, samples, opts, threads);
            json r = {{"p", p}, {"q", q}, {"seed", seed}, {"tol", tol}, {"inclusion", inclusion_json(stats)}};
            if (!stats.holds()) {
                result.exit_code = kExitVerdictFailed;
                result.failures.push_back("sampled points fell outside the big cell or exceeded the tolerance");
            }
            if (m_opt->count() > 0) {
                auto ps = hccell::verify_psi(sampler, m, samples, threads);
                const bool ok = ps.outside == 0 && ps.max_extension_residual <= tol &&
                                ps.max_equivariance_residual <= 10 * tol;
                r["psi"] = {{"m", m},
                            {"samples", ps.samples},
                            {"outside", ps.outside},
                            {"max_extension_residual", ps.max_extension_residual},
                            {"max_equivariance_residual", ps.max_equivariance_residual},
                            {"extension_tolerance", tol},
                            {"equivariance_tolerance", 10 * tol},
                            {"holds", ok}};
                if (!ok) {
                    result.exit_code = kExitVerdictFailed;
                    result.failures.push_back("psi residuals exceed the tolerance");
                }
            }
            result.results = r;
        } else if (command == "verify-paper") {
            verify::VerifyOptions opts;
            opts.profile = verify::parse_profile(profile);
            opts.seed = seed;
            opts.threads = threads;
            auto all = verify::run_all(opts);
            result.results = verify::results_payload(opts, all);
            timing = verify::timing_payload(all);
            for (const auto& c : all)
                if (!c.passed) {
                    result.exit_code = kExitVerdictFailed;
                    result.failures.push_back("criterion " + std::to_string(c.id) + " (" + c.name + ") failed");
                }
        }
    } catch (const InvalidInput& e) {
        err << "hcrep " << command << ": invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BoundExceeded& e) {
        err << "hcrep " << command << ": bound exceeded: " << e.what() << " (partial count " << e.partial_count()
            << ")\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "hcrep " << command << ": internal error: " << e.what() << '\n';
        return kExitVerdictFailed;
    }
    timing["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json report = {{"command", command},
                   {"arguments", arguments},
                   {"version", HCREP_VERSION},
                   {"input_digest", fnv1a_hex(json({{"command", command}, {"arguments", digest_input}}).dump() + digest_extra)},
                   {"results", result.results},
                   {"timing", timing}};
    const std::string text = format == "table" ? render_table(command, report) : report.dump(2) + "\n";
    if (output.empty()) {
        out << text;
    } else {
        std::ofstream f(output);
        if (!f || !(f << text)) {
            err << "hcrep: cannot write " << output << '\n';
            return kExitUsage;
        }
    }
    for (const auto& f : result.failures) err << "hcrep " << command << ": " << f << '\n';
    return result.exit_code;
}

}  // namespace hcrep::cli
