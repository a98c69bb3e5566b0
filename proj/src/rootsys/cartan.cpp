#include "hcrep/rootsys/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

#include "hcrep/error.hpp"
#include "hcrep/linalg.hpp"

namespace hcrep::rootsys {

namespace {

std::string where(std::size_t i, std::size_t j) {
    std::ostringstream os;
    os << "entry (" << i + 1 << "," << j + 1 << ")";
    return os.str();
}

}  // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    if (n == 0) throw InvalidInput("Cartan matrix is empty");
    for (const auto& row : entries_)
        if (row.size() != n) throw InvalidInput("Cartan matrix is not square");

    for (std::size_t i = 0; i < n; ++i) {
        if (entries_[i][i] != 2) throw InvalidInput("diagonal " + where(i, i) + " must be 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            int a = entries_[i][j];
            if (a > 0 || a < -3)
                throw InvalidInput("off-diagonal " + where(i, j) + " = " + std::to_string(a) +
                                   " not in {0,-1,-2,-3}");
            if ((a == 0) != (entries_[j][i] == 0))
                throw InvalidInput(where(i, j) + " and " + where(j, i) +
                                   " must vanish together");
        }
    }

    // Components and symmetrizer by BFS; d_j = d_i * a_ij / a_ji along edges.
    node_component_.assign(n, n);
    std::vector<Rational> d(n);
    for (std::size_t start = 0; start < n; ++start) {
        if (node_component_[start] != n) continue;
        std::vector<std::size_t> comp;
        std::queue<std::size_t> todo;
        node_component_[start] = components_.size();
        d[start] = 1;
        todo.push(start);
        while (!todo.empty()) {
            std::size_t i = todo.front();
            todo.pop();
            comp.push_back(i);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || entries_[i][j] == 0) continue;
                Rational dj = d[i] * entries_[i][j] / entries_[j][i];
                if (node_component_[j] == n) {
                    node_component_[j] = components_.size();
                    d[j] = dj;
                    todo.push(j);
                } else if (d[j] != dj) {
                    throw InvalidInput("Cartan matrix is not symmetrizable (cycle through " +
                                       where(i, j) + ")");
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        // Scale the component to minimal positive integers.
        BigInt lcm_den = 1, gcd_num = 0;
        for (auto i : comp) lcm_den = lcm(lcm_den, BigInt(d[i].get_den()));
        for (auto i : comp) gcd_num = gcd(gcd_num, BigInt(d[i].get_num() * (lcm_den / d[i].get_den())));
        for (auto i : comp) d[i] = Rational(d[i] * lcm_den / gcd_num);
        components_.push_back(std::move(comp));
    }
    symmetrizer_.resize(n);
    for (std::size_t i = 0; i < n; ++i) symmetrizer_[i] = static_cast<int>(to_long(d[i]));

    // Finite type: the symmetrized form must be positive definite. Check the
    // leading principal minors of the Gram matrix.
    RationalMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = symmetrizer_[i] * entries_[i][j];
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = gram(i, j);
        if (minor.determinant() <= 0)
            throw InvalidInput("Cartan matrix is not of finite type (leading minor " +
                               std::to_string(k) + " of the symmetrized form is not positive)");
    }
}

CartanMatrix CartanMatrix::of_type(char type, int rank) {
    type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
    auto bad = [&] {
        return InvalidInput(std::string("no root system of type ") + type + std::to_string(rank));
    };
    if (rank < 1) throw bad();
    const std::size_t n = static_cast<std::size_t>(rank);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
    auto chain = [&](std::size_t upto) {
        for (std::size_t i = 0; i + 1 < upto; ++i) link(i, i + 1);
    };

    switch (type) {
    case 'A':
        chain(n);
        break;
    case 'B':  // alpha_n short
        if (n < 2) throw bad();
        chain(n);
        a[n - 1][n - 2] = -2;
        break;
    case 'C':  // alpha_n long
        if (n < 2) throw bad();
        chain(n);
        a[n - 2][n - 1] = -2;
        break;
    case 'D':
        if (n < 3) throw bad();
        chain(n - 1);
        link(n - 3, n - 1);
        break;
    case 'E':
        if (n < 6 || n > 8) throw bad();
        // 1-3-4-5-6(-7-8), 2 attached to 4.
        link(0, 2);
        link(1, 3);
        for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'F':
        if (n != 4) throw bad();
        chain(4);
        a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        break;
    case 'G':
        if (n != 2) throw bad();
        a[0][1] = -3;  // alpha_1 short, alpha_2 long
        a[1][0] = -1;
        break;
    default:
        throw bad();
    }
    return CartanMatrix(std::move(a));
}

CartanMatrix CartanMatrix::block_diagonal(const CartanMatrix& a, const CartanMatrix& b) {
    const std::size_t n = a.rank() + b.rank();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) m[i][j] = a(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j) m[a.rank() + i][a.rank() + j] = b(i, j);
    return CartanMatrix(std::move(m));
}

CartanMatrix CartanMatrix::parse(std::string_view spec) {
    std::vector<CartanMatrix> factors;
    std::size_t start = 0;
    while (start <= spec.size()) {
        auto x = spec.find_first_of("xX*", start);
        std::string_view part = spec.substr(start, x == std::string_view::npos ? x : x - start);
        if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
            throw InvalidInput("bad root system type '" + std::string(spec) + "'");
        int rank = 0;
        for (char c : part.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InvalidInput("bad root system type '" + std::string(spec) + "'");
            rank = rank * 10 + (c - '0');
            if (rank > 64) throw InvalidInput("rank too large in '" + std::string(spec) + "'");
        }
        factors.push_back(of_type(part[0], rank));
        if (x == std::string_view::npos) break;
        start = x + 1;
    }
    CartanMatrix out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = block_diagonal(out, factors[i]);
    return out;
}

}  // namespace hcrep::rootsys
