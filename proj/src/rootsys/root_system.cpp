#include "hcrep/rootsys/root_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>

#include "hcrep/error.hpp"

namespace hcrep::rootsys {

// ---------------------------------------------------------------- LatticeVector

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    return LatticeVector(std::move(c));
}

int LatticeVector::height() const {
    int h = 0;
    for (int c : coeffs_) h += c;
    return h;
}

bool LatticeVector::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool LatticeVector::is_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

LatticeVector LatticeVector::operator-() const {
    LatticeVector r = *this;
    for (int& c : r.coeffs_) c = -c;
    return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
    LatticeVector r = *this;
    return r += o;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
    LatticeVector r = *this;
    return r -= o;
}

LatticeVector LatticeVector::operator*(int k) const {
    LatticeVector r = *this;
    for (int& c : r.coeffs_) c *= k;
    return r;
}

std::string LatticeVector::label() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        int c = coeffs_[i];
        if (c == 0) continue;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (std::abs(c) != 1) os << std::abs(c);
        if (coeffs_.size() <= 26)
            os << static_cast<char>('a' + i);
        else
            os << "a" << i + 1;
        first = false;
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------- Weight

Weight Weight::from_ints(const std::vector<long>& c) {
    std::vector<Rational> r;
    r.reserve(c.size());
    for (long x : c) r.emplace_back(x);
    return Weight(std::move(r));
}

bool Weight::is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return hcrep::is_integer(r); });
}

bool Weight::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= o.coords_[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

Weight Weight::operator*(const Rational& k) const {
    Weight r = *this;
    for (auto& c : r.coords_) c *= k;
    return r;
}

std::string Weight::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ',';
        out += hcrep::to_string(coords_[i]);
    }
    return out;
}

// ---------------------------------------------------------------- RootSystem

namespace {

bool enumeration_less(const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs() < b.coeffs();
}

constexpr std::size_t kMaxRoots = 1'000'000;

}  // namespace

RootSystem::RootSystem(CartanMatrix cartan) : cartan_(std::move(cartan)) {
    const std::size_t n = rank();
    gram_.assign(n, std::vector<int>(n));
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            gram_[i][j] = cartan_.symmetrizer()[i] * cartan_(i, j);
            a(i, j) = cartan_(i, j);
        }
    auto inv = a.inverse();
    if (!inv) throw InvalidInput("Cartan matrix is singular");
    cartan_inverse_ = *inv;

    std::map<LatticeVector, std::size_t> seen;
    std::queue<Root> todo;
    for (std::size_t i = 0; i < n; ++i) {
        Root s = simple_root(i);
        seen.emplace(s, 0);
        todo.push(s);
    }
    while (!todo.empty()) {
        Root r = todo.front();
        todo.pop();
        for (std::size_t i = 0; i < n; ++i) {
            Root t = reflect(r, i);
            if (seen.emplace(t, 0).second) {
                if (seen.size() > kMaxRoots)
                    throw BoundExceeded("root enumeration exceeded bound", seen.size());
                todo.push(t);
            }
        }
    }
    for (const auto& [r, unused] : seen) roots_.push_back(r);
    std::sort(roots_.begin(), roots_.end(), enumeration_less);
    for (std::size_t k = 0; k < roots_.size(); ++k) {
        index_[roots_[k]] = k;
        if (roots_[k].is_positive()) positive_.push_back(roots_[k]);
        else if (!(-roots_[k]).is_positive())
            throw InternalError("root " + roots_[k].label() + " is neither positive nor negative");
    }
}

std::optional<std::size_t> RootSystem::index_of(const LatticeVector& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Weight RootSystem::delta() const { return Weight::from_ints(std::vector<long>(rank(), 1)); }

long RootSystem::inner(const LatticeVector& a, const LatticeVector& b) const {
    long s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) s += static_cast<long>(a[i]) * gram_[i][j] * b[j];
    }
    return s;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
    auto x = root_coordinates(a);
    auto y = root_coordinates(b);
    Rational s;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram_[i][j] * y[j];
    return s;
}

int RootSystem::pairing(const LatticeVector& beta, const Root& gamma) const {
    long num = 2 * inner(beta, gamma);
    long den = inner(gamma, gamma);
    if (den == 0 || num % den != 0)
        throw InternalError("non-integral pairing " + beta.label() + " on " + gamma.label());
    return static_cast<int>(num / den);
}

Rational RootSystem::pairing(const Weight& lambda, const Root& gamma) const {
    // gamma^vee = sum_i c_i (<alpha_i,alpha_i>/<gamma,gamma>) alpha_i^vee
    long norm = inner(gamma, gamma);
    Rational s;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (gamma[i] == 0) continue;
        s += make_rational(static_cast<long>(gamma[i]) * gram_[i][i], norm) * lambda[i];
    }
    return s;
}

Weight RootSystem::to_weight(const LatticeVector& v) const {
    std::vector<Rational> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        long s = 0;
        for (std::size_t j = 0; j < rank(); ++j) s += static_cast<long>(v[j]) * cartan_(i, j);
        c[i] = s;
    }
    return Weight(std::move(c));
}

std::vector<Rational> RootSystem::root_coordinates(const Weight& lambda) const {
    return cartan_inverse_ * lambda.coords();
}

std::optional<LatticeVector> RootSystem::to_lattice(const Weight& lambda) const {
    auto x = root_coordinates(lambda);
    std::vector<int> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        if (!hcrep::is_integer(x[i]) || !x[i].get_num().fits_sint_p()) return std::nullopt;
        c[i] = static_cast<int>(x[i].get_num().get_si());
    }
    return LatticeVector(std::move(c));
}

Root RootSystem::reflect(const LatticeVector& v, std::size_t i) const {
    int k = 0;
    for (std::size_t j = 0; j < rank(); ++j) k += v[j] * cartan_(i, j);
    std::vector<int> c = v.coeffs();
    c[i] -= k;
    return LatticeVector(std::move(c));
}

Weight RootSystem::reflect(const Weight& lambda, std::size_t i) const {
    std::vector<Rational> c = lambda.coords();
    for (std::size_t k = 0; k < rank(); ++k) c[k] -= lambda[i] * cartan_(k, i);
    return Weight(std::move(c));
}

std::size_t RootSystem::component_of(const Root& r) const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (r[i] != 0) return cartan_.component_of_node(i);
    throw InvalidInput("zero vector has no component");
}

RootSystem build_root_system(const CartanMatrix& cm) { return RootSystem(cm); }

Rational coroot_pairing(const RootSystem& rs, const Weight& lambda, const Root& gamma) {
    if (lambda.size() != rs.rank()) throw InvalidInput("weight has wrong rank");
    if (!rs.is_root(gamma)) throw InvalidInput(gamma.label() + " is not a root");
    return rs.pairing(lambda, gamma);
}

}  // namespace hcrep::rootsys
