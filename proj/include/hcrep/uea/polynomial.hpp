#pragma once

#include <map>
#include <string>
#include <vector>

#include "hcrep/rational.hpp"

namespace hcrep::uea {

/// Sparse polynomial with rational coefficients in a fixed number of
/// variables; no zero terms are stored.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& k) const;
    Polynomial& operator+=(const Polynomial& o);
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Rational evaluate(const std::vector<Rational>& x) const;
    /// Substitutes images[i] for variable i.
    Polynomial compose(const std::vector<Polynomial>& images) const;

    /// Highest degree first, e.g. "1/2*x^2 + x - 3".
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace hcrep::uea
