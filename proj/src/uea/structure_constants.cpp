#include "hcrep/uea/structure_constants.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hcrep/error.hpp"

namespace hcrep::uea {

namespace {

using Brackets = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

void accumulate(std::map<std::size_t, Rational>& acc, const SparseVector& v, const Rational& k) {
    for (const auto& [i, c] : v) {
        auto& slot = acc[i];
        slot += c * k;
        if (slot == 0) acc.erase(i);
    }
}

SparseVector to_sparse(const std::map<std::size_t, Rational>& acc) { return {acc.begin(), acc.end()}; }

SparseVector normalize(SparseVector v) {
    std::map<std::size_t, Rational> acc;
    accumulate(acc, v, 1);
    return to_sparse(acc);
}

SparseVector negate(const SparseVector& v) {
    SparseVector r = v;
    for (auto& [i, c] : r) c = -c;
    return r;
}

std::string render(const StructureConstants& sc, const SparseVector& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : v) {
        if (!s.empty()) s += " + ";
        s += to_string(c) + "*" + sc.label(i);
    }
    return s;
}

std::vector<std::string> basis_labels(const RootSystem& rs) {
    std::vector<std::string> neg, cartan, pos;
    for (const auto& g : rs.roots())
        (g.height() < 0 ? neg : pos).push_back(g.height() < 0 ? "F(" + (-g).label() + ")" : "E(" + g.label() + ")");
    for (std::size_t i = 0; i < rs.rank(); ++i) cartan.push_back("H(" + rs.simple_root(i).label() + ")");
    neg.insert(neg.end(), cartan.begin(), cartan.end());
    neg.insert(neg.end(), pos.begin(), pos.end());
    return neg;
}

}  // namespace

std::string simple_letter(const RootSystem& rs, std::size_t i) { return rs.simple_root(i).label(); }

StructureConstants::StructureConstants(RootSystem rs, const Brackets& brackets, std::string description)
    : rs_(std::move(rs)), description_(std::move(description)) {
    const auto& roots = rs_.roots();
    for (const auto& r : roots)
        if (r.height() < 0) ++negatives_;
    labels_ = basis_labels(rs_);
    for (std::size_t i = 0; i < negatives_; ++i) {
        kinds_.push_back(BasisKind::negative);
        weights_.push_back(roots[i]);
    }
    for (std::size_t i = 0; i < rs_.rank(); ++i) {
        kinds_.push_back(BasisKind::cartan);
        weights_.push_back(LatticeVector::zero(rs_.rank()));
    }
    for (std::size_t i = negatives_; i < roots.size(); ++i) {
        kinds_.push_back(BasisKind::positive);
        weights_.push_back(roots[i]);
    }

    const std::size_t n = dim();
    table_.assign(n * n, {});
    std::vector<bool> given(n * n, false);
    for (const auto& [key, value] : brackets) {
        auto [i, j] = key;
        if (i >= n || j >= n) throw InvalidInput("bracket index out of range");
        for (const auto& [k, c] : value)
            if (k >= n) throw InvalidInput("bracket index out of range");
        table_[i * n + j] = normalize(value);
        given[i * n + j] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                if (!table_[i * n + i].empty())
                    throw InvalidInput("antisymmetry violated: [" + labels_[i] + ", " + labels_[i] + "] != 0");
                continue;
            }
            if (given[i * n + j] && given[j * n + i]) {
                if (table_[j * n + i] != negate(table_[i * n + j]))
                    throw InvalidInput("antisymmetry violated for (" + labels_[i] + ", " + labels_[j] + ")");
            } else if (given[i * n + j]) {
                table_[j * n + i] = negate(table_[i * n + j]);
            }
        }
    validate();
}

SparseVector StructureConstants::bracket(const SparseVector& u, const SparseVector& v) const {
    std::map<std::size_t, Rational> acc;
    for (const auto& [i, a] : u)
        for (const auto& [j, b] : v) accumulate(acc, bracket(i, j), a * b);
    return to_sparse(acc);
}

void StructureConstants::validate() const {
    const std::size_t n = dim(), r = rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& v = bracket(i, j);
            if (is_cartan(i) && is_cartan(j) && !v.empty())
                throw InvalidInput("Cartan elements do not commute: [" + labels_[i] + ", " + labels_[j] + "]");
            for (const auto& [k, c] : v)
                if (weights_[k] != weights_[i] + weights_[j])
                    throw InvalidInput("grading violated: [" + labels_[i] + ", " + labels_[j] + "] contains " +
                                       labels_[k]);
        }
    // [H_i, X_gamma] = gamma(H_i) X_gamma with gamma(H_i) = sum_j gamma_j a_ij.
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (is_cartan(k)) continue;
            long value = 0;
            for (std::size_t j = 0; j < r; ++j) value += long(weights_[k][j]) * rs_.cartan()(i, j);
            SparseVector expected;
            if (value != 0) expected.emplace_back(k, Rational(value));
            if (bracket(cartan_index(i), k) != expected)
                throw InvalidInput("grading violated: [" + labels_[cartan_index(i)] + ", " + labels_[k] +
                                   "] = " + render(*this, bracket(cartan_index(i), k)) + ", expected " +
                                   render(*this, expected));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::map<std::size_t, Rational> acc;
                for (const auto& [m, c] : bracket(i, j)) accumulate(acc, bracket(m, k), c);
                for (const auto& [m, c] : bracket(j, k)) accumulate(acc, bracket(m, i), c);
                for (const auto& [m, c] : bracket(k, i)) accumulate(acc, bracket(m, j), c);
                if (!acc.empty())
                    throw InvalidInput("Jacobi identity fails on (" + labels_[i] + ", " + labels_[j] + ", " +
                                       labels_[k] + ")");
            }
}

std::optional<std::size_t> StructureConstants::find_label(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::size_t StructureConstants::root_vector(const Root& gamma) const {
    auto idx = rs_.index_of(gamma);
    if (!idx) throw InvalidInput(gamma.label() + " is not a root");
    return *idx < negatives_ ? *idx : *idx + rank();
}

StructureConstants StructureConstants::builtin_sl(std::size_t n) {
    if (n < 2 || n > 8) throw InvalidInput("builtin sl<n> supports 2 <= n <= 8");
    RootSystem rs(rootsys::CartanMatrix::of_type('A', static_cast<int>(n - 1)));
    const std::size_t r = n - 1;

    // Basis element as a list of (row, col, coefficient) matrix entries.
    using Entries = std::vector<std::tuple<std::size_t, std::size_t, int>>;
    auto root_of = [&](std::size_t row, std::size_t col) {
        std::vector<int> c(r, 0);
        std::size_t lo = std::min(row, col), hi = std::max(row, col);
        for (std::size_t k = lo; k < hi; ++k) c[k] = row < col ? 1 : -1;
        return Root(c);
    };
    std::vector<Entries> matrices;
    std::size_t negatives = 0;
    for (const auto& g : rs.roots())
        if (g.height() < 0) ++negatives;
    auto unit_for = [&](const Root& g) {
        // Support of g is a contiguous block lo..hi-1.
        std::size_t lo = 0;
        while (g[lo] == 0) ++lo;
        std::size_t hi = lo;
        while (hi < r && g[hi] != 0) ++hi;
        return g.height() > 0 ? Entries{{lo, hi, 1}} : Entries{{hi, lo, 1}};
    };
    for (std::size_t i = 0; i < negatives; ++i) matrices.push_back(unit_for(rs.roots()[i]));
    for (std::size_t k = 0; k < r; ++k) matrices.push_back({{k, k, 1}, {k + 1, k + 1, -1}});
    for (std::size_t i = negatives; i < rs.roots().size(); ++i) matrices.push_back(unit_for(rs.roots()[i]));

    auto index_of_root = [&](const Root& g) {
        std::size_t idx = *rs.index_of(g);
        return idx < negatives ? idx : idx + r;
    };

    Brackets br;
    const std::size_t dim = matrices.size();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<long> m(n * n, 0);
            for (auto [a, b, x] : matrices[i])
                for (auto [c, d, y] : matrices[j]) {
                    if (b == c) m[a * n + d] += long(x) * y;
                    if (d == a) m[c * n + b] -= long(x) * y;
                }
            std::map<std::size_t, Rational> acc;
            long cumulative = 0;
            for (std::size_t k = 0; k < r; ++k) {
                cumulative += m[k * n + k];
                if (cumulative != 0) acc[negatives + k] = cumulative;
            }
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (a != b && m[a * n + b] != 0) acc[index_of_root(root_of(a, b))] = m[a * n + b];
            if (!acc.empty()) br[{i, j}] = to_sparse(acc);
        }
    return StructureConstants(std::move(rs), br, "sl" + std::to_string(n));
}

StructureConstants StructureConstants::parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed structure constants JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("cartan") || !j.contains("brackets"))
        throw InvalidInput("structure constants JSON needs \"cartan\" and \"brackets\"");
    std::optional<rootsys::CartanMatrix> cm;
    try {
        if (j["cartan"].is_string())
            cm = rootsys::CartanMatrix::parse(j["cartan"].get<std::string>());
        else
            cm = rootsys::CartanMatrix(j["cartan"].get<std::vector<std::vector<int>>>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad \"cartan\": ") + e.what());
    }
    RootSystem rs(*cm);
    const std::vector<std::string> labels = basis_labels(rs);
    if (j.contains("basis")) {
        if (j["basis"] != nlohmann::json(labels))
            throw InvalidInput("\"basis\" does not match the basis order of the root system");
    }
    auto index = [&](const nlohmann::json& v) -> std::size_t {
        if (v.is_number_unsigned()) return v.get<std::size_t>();
        if (v.is_string()) {
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (labels[i] == v.get<std::string>()) return i;
            throw InvalidInput("unknown basis label " + v.get<std::string>());
        }
        throw InvalidInput("basis reference must be an index or a label");
    };
    if (!j["brackets"].is_array()) throw InvalidInput("\"brackets\" must be an array");
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> acc;
    for (const auto& t : j["brackets"]) {
        if (!t.is_array() || t.size() != 4) throw InvalidInput("bracket entries are [i, j, k, coefficient]");
        Rational c = t[3].is_string() ? parse_rational(t[3].get<std::string>())
                     : t[3].is_number_integer() ? Rational(t[3].get<long>())
                                                : throw InvalidInput("coefficient must be an integer or string");
        auto key = std::make_pair(index(t[0]), index(t[1]));
        if (key.first >= labels.size() || key.second >= labels.size()) throw InvalidInput("bracket index out of range");
        std::size_t k = index(t[2]);
        if (k >= labels.size()) throw InvalidInput("bracket index out of range");
        auto& slot = acc[key];
        if (slot.count(k)) throw InvalidInput("duplicate bracket entry for (" + labels[key.first] + ", " +
                                              labels[key.second] + ") -> " + labels[k]);
        slot[k] = c;
    }
    Brackets br;
    for (const auto& [key, m] : acc) br[key] = to_sparse(m);
    return StructureConstants(std::move(rs), br, "json");
}

StructureConstants StructureConstants::load(const std::string& source) {
    if (source.size() > 2 && source.rfind("sl", 0) == 0 &&
        source.find_first_not_of("0123456789", 2) == std::string::npos)
        return builtin_sl(std::stoul(source.substr(2)));
    std::string path = !source.empty() && source[0] == '@' ? source.substr(1) : source;
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read structure constants from " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

std::string StructureConstants::to_json_text() const {
    nlohmann::json j;
    std::vector<std::vector<int>> cm(rank(), std::vector<int>(rank()));
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t k = 0; k < rank(); ++k) cm[i][k] = rs_.cartan()(i, k);
    j["cartan"] = cm;
    j["basis"] = labels_;
    j["brackets"] = nlohmann::json::array();
    for (std::size_t a = 0; a < dim(); ++a)
        for (std::size_t b = a + 1; b < dim(); ++b)
            for (const auto& [k, c] : bracket(a, b)) j["brackets"].push_back({a, b, k, to_string(c)});
    return j.dump(1);
}

}  // namespace hcrep::uea
