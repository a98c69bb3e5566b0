#include "hcrep/uea/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "hcrep/error.hpp"

namespace hcrep::uea {

namespace {

void same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw InvalidInput("polynomials in different numbers of variables");
}

unsigned total(const Polynomial::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, 1);
    return p;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw InvalidInput("exponent vector has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Rational(-1); }

Polynomial Polynomial::operator*(const Rational& k) const {
    Polynomial r(nvars_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    same_vars(*this, o);
    Polynomial r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
    if (x.size() != nvars_) throw InvalidInput("point has wrong number of coordinates");
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw InvalidInput("wrong number of substitutions");
    const std::size_t m = images.empty() ? 0 : images.front().nvars();
    for (const auto& p : images)
        if (p.nvars() != m) throw InvalidInput("substitutions in different numbers of variables");
    Polynomial r(m);
    for (const auto& [e, c] : terms_) {
        Polynomial t = constant(m, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t = t * images[i];
        r += t;
    }
    return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw InvalidInput("wrong number of variable names");
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Rational>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        unsigned da = total(a.first), db = total(b.first);
        return da != db ? da > db : a.first > b.first;
    });
    std::string out;
    for (const auto& [e, c] : order) {
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += hcrep::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += hcrep::to_string(mag) + "*" + mono;
    }
    return out;
}

}  // namespace hcrep::uea
