#include "hcrep/uea/expr.hpp"

#include <cctype>
#include <string>

#include "hcrep/error.hpp"

namespace hcrep::uea {

namespace {

class Parser {
public:
    Parser(const PBWAlgebra& alg, std::string_view text) : alg_(alg) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    Element parse() {
        if (s_.empty()) fail("empty expression");
        Element e = sum();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidInput("expression: " + what + " at position " + std::to_string(pos_));
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Element sum() {
        Element total;
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        for (;;) {
            Element t = product();
            total += negative ? t * Rational(-1) : t;
            if (eat('+'))
                negative = false;
            else if (eat('-'))
                negative = true;
            else
                return total;
        }
    }

    Element product() {
        Element p = power();
        while (eat('*')) p = alg_.multiply(p, power());
        return p;
    }

    Element power() {
        Element base = atom();
        if (!eat('^')) return base;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        unsigned long k = std::stoul(s_.substr(start, pos_ - start));
        if (k > 64) fail("exponent too large");
        Element r = Element::scalar(1);
        for (unsigned long i = 0; i < k; ++i) r = alg_.multiply(r, base);
        return r;
    }

    Element atom() {
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
                ++pos_;
            return Element::scalar(parse_rational(s_.substr(start, pos_ - start)));
        }
        if (eat('(')) {
            Element e = sum();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if ((c == 'E' || c == 'F' || c == 'H') && pos_ + 1 < s_.size() && s_[pos_ + 1] == '(') {
            std::size_t close = s_.find(')', pos_);
            if (close == std::string::npos) fail("unterminated label");
            std::string label = s_.substr(pos_, close - pos_ + 1);
            auto idx = alg_.constants().find_label(label);
            if (!idx) fail("unknown basis element " + label);
            pos_ = close + 1;
            return Element::basis(*idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const PBWAlgebra& alg_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(const PBWAlgebra& alg, std::string_view text) { return Parser(alg, text).parse(); }

}  // namespace hcrep::uea
