#include "hcrep/uea/center.hpp"

#include <map>

#include "hcrep/error.hpp"

namespace hcrep::uea {

namespace {

std::size_t component_of_basis(const StructureConstants& sc, std::size_t i) {
    if (sc.is_cartan(i)) {
        for (std::size_t k = 0; k < sc.rank(); ++k)
            if (sc.cartan_index(k) == i) return sc.rs().component_of(sc.rs().simple_root(k));
    }
    return sc.rs().component_of(sc.weight(i));
}

}  // namespace

std::vector<std::string> cartan_variable_names(const RootSystem& rs) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rs.rank(); ++i) names.push_back("H(" + simple_letter(rs, i) + ")");
    return names;
}

Polynomial beta_projection(const PBWAlgebra& alg, const Element& u) {
    const auto& sc = alg.constants();
    auto wt = alg.weight_of(u);
    if (!wt || !wt->is_zero()) throw InvalidInput("beta is defined on elements of weight 0");
    Polynomial p(sc.rank());
    for (const auto& [w, c] : u.terms()) {
        Polynomial::Exponents e(sc.rank(), 0);
        bool cartan_only = true;
        for (auto i : w) {
            if (!sc.is_cartan(i)) {
                cartan_only = false;
                break;
            }
            ++e[i - sc.cartan_index(0)];
        }
        if (cartan_only) p.add_term(e, c);
    }
    return p;
}

RationalMatrix killing_form(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    RationalMatrix b(n, n);
    // tr(ad x ad y) = sum_{j,k} c_{x j}^k c_{y k}^j
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y) {
            Rational t;
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& [k, c] : sc.bracket(x, j))
                    for (const auto& [m, d] : sc.bracket(y, k))
                        if (m == j) t += c * d;
            b(x, y) = t;
            b(y, x) = t;
        }
    return b;
}

Casimir casimir(const PBWAlgebra& alg) {
    const auto& sc = alg.constants();
    const auto& rs = sc.rs();
    const RationalMatrix kf = killing_form(sc);
    std::map<std::size_t, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < sc.dim(); ++i) blocks[component_of_basis(sc, i)].push_back(i);

    Casimir out;
    out.normalization =
        "Killing-dual Casimir of each simple factor scaled by B(H_theta,H_theta)/2 (theta the highest root); "
        "acts on V_lambda by (lambda, lambda+2delta) with (theta,theta) = 2";
    std::vector<Rational> coeffs;
    for (const auto& [comp, idx] : blocks) {
        const std::size_t m = idx.size();
        RationalMatrix g(m, m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) g(a, b) = kf(idx[a], idx[b]);
        auto ginv = g.inverse();
        if (!ginv) throw InvalidInput("Killing form is degenerate; the algebra is not semisimple");

        Root theta;
        for (const auto& r : rs.positive_roots())
            if (rs.component_of(r) == comp) theta = r;
        // H_theta = 2/(theta,theta) sum_j theta_j d_j H_j
        std::vector<Rational> h(sc.dim());
        const Rational scale_theta = make_rational(2, rs.inner(theta, theta));
        for (std::size_t j = 0; j < sc.rank(); ++j)
            h[sc.cartan_index(j)] = scale_theta * theta[j] * rs.symmetrizer()[j];
        Rational bt;
        for (std::size_t a = 0; a < sc.dim(); ++a)
            for (std::size_t b = 0; b < sc.dim(); ++b)
                if (h[a] != 0 && h[b] != 0) bt += h[a] * h[b] * kf(a, b);
        const Rational scale = bt / 2;
        out.scale.push_back(scale);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if ((*ginv)(a, b) != 0) out.element += alg.normal_order({idx[a], idx[b]}, scale * (*ginv)(a, b));
    }
    return out;
}

bool is_central(const PBWAlgebra& alg, const Element& z) {
    for (std::size_t i = 0; i < alg.constants().dim(); ++i)
        if (!alg.commutator(z, Element::basis(i)).is_zero()) return false;
    return true;
}

Rational infinitesimal_character(const PBWAlgebra& alg, const Element& z, const Weight& lambda, bool strict) {
    if (lambda.size() != alg.constants().rank()) throw InvalidInput("weight has wrong rank");
    if (strict && !is_central(alg, z)) throw InvalidInput("element is not central");
    return beta_projection(alg, z).evaluate(lambda.coords());
}

Polynomial gamma_polynomial(const PBWAlgebra& alg, const Element& z) {
    const std::size_t n = alg.constants().rank();
    std::vector<Polynomial> shift;
    for (std::size_t i = 0; i < n; ++i)
        shift.push_back(Polynomial::variable(n, i) - Polynomial::constant(n, 1));
    return beta_projection(alg, z).compose(shift);
}

Verdict gamma_invariance_check(const PBWAlgebra& alg, const Element& z,
                               const std::vector<rootsys::WeylGroupElement>& w, const std::vector<Weight>& samples) {
    Verdict v;
    if (!is_central(alg, z)) v.violate("element is not central");
    const std::size_t n = alg.constants().rank();
    const Polynomial g = gamma_polynomial(alg, z);
    const auto names = cartan_variable_names(alg.rs());
    v.notes.push_back("gamma(z) = " + g.to_string(names));

    Check poly{"polynomial_invariant"}, sampled{"sampled_values_invariant"};
    for (const auto& s : w) {
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial row(n);
            for (std::size_t j = 0; j < n; ++j)
                if (s.weight_matrix(i, j) != 0) row += Polynomial::variable(n, j) * Rational(s.weight_matrix(i, j));
            images.push_back(row);
        }
        if (g.compose(images) != g) {
            poly.passed = false;
            poly.witnesses.push_back("word " + std::to_string(s.length()));
        }
        for (const auto& lambda : samples) {
            Rational a = g.evaluate(s.apply(lambda).coords()), b = g.evaluate(lambda.coords());
            if (a != b) {
                sampled.passed = false;
                sampled.witnesses.push_back("(" + lambda.to_string() + "): " + to_string(a) + " != " + to_string(b));
            }
        }
    }
    v.add(poly);
    v.add(sampled);
    return v;
}

RationalMatrix VermaAction::at(const Weight& lambda) const {
    if (lambda.size() != rank) throw InvalidInput("weight has wrong rank");
    RationalMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [i, p] : columns[j]) m(i, j) = p.evaluate(lambda.coords());
    return m;
}

VermaAction verma_action(const PBWAlgebra& alg, const Element& u, long depth) {
    const auto& sc = alg.constants();
    const std::size_t n = sc.rank();
    VermaAction out;
    out.rank = n;
    std::vector<std::size_t> negatives;
    for (std::size_t i = 0; i < sc.dim(); ++i)
        if (sc.kind(i) == BasisKind::negative) negatives.push_back(i);
    Word cur;
    auto rec = [&](auto&& self, std::size_t from, long budget) -> void {
        out.basis.push_back(cur);
        for (std::size_t k = from; k < negatives.size(); ++k) {
            long h = -sc.weight(negatives[k]).height();
            if (h > budget) continue;
            cur.push_back(static_cast<std::uint16_t>(negatives[k]));
            self(self, k, budget - h);
            cur.pop_back();
        }
    };
    rec(rec, 0, depth);
    std::sort(out.basis.begin(), out.basis.end());
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < out.basis.size(); ++i) index[out.basis[i]] = i;

    out.columns.resize(out.basis.size());
    for (std::size_t j = 0; j < out.basis.size(); ++j) {
        std::map<std::size_t, Polynomial> col;
        const Element image = alg.multiply(u, Element::monomial(out.basis[j]));
        for (const auto& [w, c] : image.terms()) {
            Word neg;
            Polynomial::Exponents e(n, 0);
            bool kills = false;
            for (auto i : w) {
                if (sc.kind(i) == BasisKind::positive) {
                    kills = true;
                    break;
                }
                if (sc.is_cartan(i))
                    ++e[i - sc.cartan_index(0)];
                else
                    neg.push_back(i);
            }
            if (kills) continue;
            auto it = index.find(neg);
            if (it == index.end()) continue;  // beyond the truncation
            auto [slot, inserted] = col.try_emplace(it->second, n);
            slot->second.add_term(e, c);
        }
        for (auto& [i, p] : col)
            if (!p.is_zero()) out.columns[j].emplace_back(i, std::move(p));
    }
    return out;
}

RationalMatrix verma_action_oracle(const PBWAlgebra& alg, const Element& u, const Weight& lambda, long depth) {
    return verma_action(alg, u, depth).at(lambda);
}

}  // namespace hcrep::uea
