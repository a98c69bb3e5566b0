#include "hcrep/cli/serialize.hpp"

#include <cctype>

#include "hcrep/error.hpp"
#include "hcrep/rational.hpp"

namespace hcrep::cli {

json root_system_json(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    json roots = json::array();
    for (const auto& r : rs.roots())
        roots.push_back({{"label", r.label()}, {"coefficients", r.coeffs()}, {"height", r.height()}});
    json simple = json::array();
    for (std::size_t i = 0; i < n; ++i) simple.push_back(rs.simple_root(i).label());
    json components = json::array();
    for (const auto& c : rs.cartan().components()) components.push_back(c);
    return {{"rank", n},
            {"cartan", rs.cartan().entries()},
            {"symmetrizer", rs.symmetrizer()},
            {"components", components},
            {"simple_roots", simple},
            {"root_count", rs.roots().size()},
            {"positive_root_count", rs.positive_roots().size()},
            {"roots", roots},
            {"delta", rs.delta().to_string()}};
}

json labels_json(const std::vector<Root>& roots) {
    json j = json::array();
    for (const auto& r : roots) j.push_back(r.label());
    return j;
}

json verdict_json(const Verdict& v) {
    json checks = json::array();
    for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witnesses", c.witnesses}});
    return {{"holds", v.holds}, {"checks", checks}, {"preconditions", v.preconditions}, {"notes", v.notes}};
}

json inclusion_json(const hccell::InclusionStats& s) {
    json failures = json::array();
    for (const auto& f : s.failures) failures.push_back(json::parse(f));
    return {{"samples", s.samples},
            {"inside", s.inside},
            {"outside", s.outside},
            {"residual_exceeded", s.residual_exceeded},
            {"residual_quantiles",
             {{"min", s.min_residual},
              {"median", s.median_residual},
              {"p90", s.p90_residual},
              {"p99", s.p99_residual},
              {"max", s.max_residual}}},
            {"min_abs_det_a", s.min_det_a},
            {"max_form_defect", s.max_form_defect},
            {"holds", s.holds()},
            {"failures", failures}};
}

Root parse_root(const RootSystem& rs, std::string_view label) {
    const std::size_t n = rs.rank();
    std::vector<int> c(n, 0);
    std::size_t i = 0;
    bool any = false;
    auto fail = [&](const std::string& why) -> Root {
        throw InvalidInput("cannot parse root '" + std::string(label) + "': " + why);
    };
    while (i < label.size()) {
        int sign = 1;
        if (label[i] == '+' || label[i] == '-') {
            sign = label[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            return fail("expected + or -");
        }
        int k = 0;
        bool digits = false;
        while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) {
            k = k * 10 + (label[i++] - '0');
            digits = true;
            if (k > 1000) return fail("coefficient too large");
        }
        if (!digits) k = 1;
        if (i >= label.size() || label[i] < 'a' || label[i] > 'z') return fail("expected a simple-root letter");
        const std::size_t idx = static_cast<std::size_t>(label[i++] - 'a');
        if (idx >= n) return fail("letter beyond rank");
        c[idx] += sign * k;
        any = true;
    }
    if (!any) return fail("empty");
    Root r(std::move(c));
    if (!rs.is_root(r)) return fail("not a root");
    return r;
}

rootsys::PositiveSystem parse_positive_system(const RootSystem& rs, std::string_view text) {
    std::vector<Root> roots;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        roots.push_back(parse_root(rs, text.substr(start, end - start)));
        start = end + 1;
    }
    return rootsys::PositiveSystem::of_full(rs, std::move(roots));
}

rootsys::CartanMatrix cartan_from_json(const json& j) {
    if (j.is_object()) {
        if (!j.contains("cartan")) throw InvalidInput("Cartan JSON object needs a \"cartan\" field");
        return cartan_from_json(j.at("cartan"));
    }
    if (j.is_string()) return rootsys::CartanMatrix::parse(j.get<std::string>());
    if (!j.is_array()) throw InvalidInput("Cartan JSON must be a matrix, a type string or an object");
    std::vector<std::vector<int>> m;
    for (const auto& row : j) {
        if (!row.is_array()) throw InvalidInput("Cartan matrix rows must be arrays");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw InvalidInput("Cartan matrix entries must be integers");
            r.push_back(x.get<int>());
        }
        m.push_back(std::move(r));
    }
    return rootsys::CartanMatrix(std::move(m));
}

}  // namespace hcrep::cli
