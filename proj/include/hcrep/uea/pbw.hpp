#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hcrep/uea/structure_constants.hpp"

namespace hcrep::uea {

/// PBW monomial as a nondecreasing sequence of basis indices; b_0^2 b_3 is
/// {0, 0, 3}.
using Word = std::vector<std::uint16_t>;

/// Element of U(g) in PBW normal form: sorted words with nonzero rational
/// coefficients.
class Element {
public:
    Element() = default;
    static Element scalar(const Rational& c);
    static Element basis(std::size_t i);
    /// The word must already be sorted.
    static Element monomial(Word w, const Rational& c = 1);

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t degree() const;

    void add(const Word& w, const Rational& c);
    Element& operator+=(const Element& o);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Rational& k) const;
    bool operator==(const Element& o) const = default;

private:
    std::map<Word, Rational> terms_;
};

/// Products in U(g) computed by commutator rewriting xy = yx + [x, y] with a
/// memoized left multiplication by basis elements. Thread-safe.
class PBWAlgebra {
public:
    explicit PBWAlgebra(StructureConstants sc);

    const StructureConstants& constants() const { return sc_; }
    const RootSystem& rs() const { return sc_.rs(); }

    /// b_x * m for a basis index and a PBW monomial.
    Element left_multiply(std::size_t x, const Word& m) const;
    Element multiply(const Element& a, const Element& b) const;
    Element commutator(const Element& a, const Element& b) const;
    /// PBW form of c * b_{w1} b_{w2} ... b_{wk} for an arbitrary word.
    Element normal_order(const std::vector<std::size_t>& word, const Rational& c = 1) const;

    /// Common ad(h)-weight of all monomials; nullopt if inhomogeneous. The
    /// zero element has weight 0.
    std::optional<LatticeVector> weight_of(const Element& u) const;

    /// Highest degree first: "F(a)^2*E(a) + 2*F(a)*H(a) - 2*F(a)"
    std::string to_string(const Element& u) const;

    std::size_t memo_size() const;

private:
    Element left_multiply_element(std::size_t x, const Element& e) const;

    StructureConstants sc_;
    mutable std::map<std::pair<std::size_t, Word>, Element> memo_;
    mutable std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
};

enum class RewriteStrategy { leftmost, rightmost, random };

/// Reference normal ordering: repeatedly rewrites one out-of-order adjacent
/// pair, chosen by the strategy, in arbitrary (unsorted) words until every
/// word is sorted. No memoization; used to test confluence.
Element rewrite_normal_order(const StructureConstants& sc, const std::vector<std::size_t>& word,
                             RewriteStrategy strategy, std::uint64_t seed = 0);

}  // namespace hcrep::uea
