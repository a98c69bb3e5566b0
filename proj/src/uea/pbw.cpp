#include "hcrep/uea/pbw.hpp"

#include <algorithm>
#include <random>

#include "hcrep/error.hpp"

namespace hcrep::uea {

Element Element::scalar(const Rational& c) { return monomial({}, c); }

Element Element::basis(std::size_t i) { return monomial({static_cast<std::uint16_t>(i)}); }

Element Element::monomial(Word w, const Rational& c) {
    Element e;
    e.add(w, c);
    return e;
}

std::size_t Element::degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return d;
}

void Element::add(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-(const Element& o) const { return *this + o * Rational(-1); }

Element Element::operator*(const Rational& k) const {
    Element r;
    if (k == 0) return r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * k);
    return r;
}

PBWAlgebra::PBWAlgebra(StructureConstants sc) : sc_(std::move(sc)) {
    if (sc_.dim() > 0xFFFF) throw InvalidInput("algebra too large");
}

Element PBWAlgebra::left_multiply(std::size_t x, const Word& m) const {
    if (m.empty() || x <= m.front()) {
        Word w;
        w.reserve(m.size() + 1);
        w.push_back(static_cast<std::uint16_t>(x));
        w.insert(w.end(), m.begin(), m.end());
        return Element::monomial(std::move(w));
    }
    auto key = std::make_pair(x, m);
    {
        std::lock_guard lock(*mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    // x y r = y (x r) + [x, y] r with y = m[0] < x.
    const std::size_t y = m.front();
    const Word rest(m.begin() + 1, m.end());
    Element result = left_multiply_element(y, left_multiply(x, rest));
    for (const auto& [k, c] : sc_.bracket(x, y)) result += left_multiply(k, rest) * c;
    std::lock_guard lock(*mutex_);
    memo_.emplace(std::move(key), result);
    return result;
}

Element PBWAlgebra::left_multiply_element(std::size_t x, const Element& e) const {
    Element r;
    for (const auto& [w, c] : e.terms()) r += left_multiply(x, w) * c;
    return r;
}

Element PBWAlgebra::multiply(const Element& a, const Element& b) const {
    Element r;
    for (const auto& [w, c] : a.terms()) {
        Element t = b * c;
        for (auto it = w.rbegin(); it != w.rend(); ++it) t = left_multiply_element(*it, t);
        r += t;
    }
    return r;
}

Element PBWAlgebra::commutator(const Element& a, const Element& b) const {
    return multiply(a, b) - multiply(b, a);
}

Element PBWAlgebra::normal_order(const std::vector<std::size_t>& word, const Rational& c) const {
    Element t = Element::scalar(c);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it >= sc_.dim()) throw InvalidInput("basis index out of range");
        t = left_multiply_element(*it, t);
    }
    return t;
}

std::optional<LatticeVector> PBWAlgebra::weight_of(const Element& u) const {
    std::optional<LatticeVector> weight;
    for (const auto& [w, c] : u.terms()) {
        LatticeVector v = LatticeVector::zero(sc_.rank());
        for (auto i : w) v += sc_.weight(i);
        if (weight && *weight != v) return std::nullopt;
        weight = v;
    }
    return weight ? weight : LatticeVector::zero(sc_.rank());
}

std::string PBWAlgebra::to_string(const Element& u) const {
    if (u.is_zero()) return "0";
    std::vector<std::pair<Word, Rational>> order(u.terms().begin(), u.terms().end());
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    std::string out;
    for (const auto& [w, c] : order) {
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (!mono.empty()) mono += "*";
            mono += sc_.label(w[i]);
            if (j - i > 1) mono += "^" + std::to_string(j - i);
            i = j;
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

std::size_t PBWAlgebra::memo_size() const {
    std::lock_guard lock(*mutex_);
    return memo_.size();
}

Element rewrite_normal_order(const StructureConstants& sc, const std::vector<std::size_t>& word,
                             RewriteStrategy strategy, std::uint64_t seed) {
    for (auto i : word)
        if (i >= sc.dim()) throw InvalidInput("basis index out of range");
    std::mt19937_64 rng(seed);
    std::map<Word, Rational> pending;
    pending[Word(word.begin(), word.end())] = 1;
    Element done;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const Rational c = node.mapped();
        std::vector<std::size_t> inversions;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) inversions.push_back(i);
        if (inversions.empty()) {
            done.add(w, c);
            continue;
        }
        std::size_t at = strategy == RewriteStrategy::leftmost    ? inversions.front()
                         : strategy == RewriteStrategy::rightmost ? inversions.back()
                                                                  : inversions[rng() % inversions.size()];
        auto push = [&](Word v, const Rational& k) {
            auto& slot = pending[std::move(v)];
            slot += k;
        };
        Word swapped = w;
        std::swap(swapped[at], swapped[at + 1]);
        push(swapped, c);
        for (const auto& [k, b] : sc.bracket(w[at], w[at + 1])) {
            Word v(w.begin(), w.begin() + at);
            v.push_back(static_cast<std::uint16_t>(k));
            v.insert(v.end(), w.begin() + at + 2, w.end());
            push(std::move(v), c * b);
        }
        std::erase_if(pending, [](const auto& kv) { return kv.second == 0; });
    }
    return done;
}

}  // namespace hcrep::uea
