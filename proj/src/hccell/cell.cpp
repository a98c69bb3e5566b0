#include "hcrep/hccell/cell.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "hcrep/error.hpp"
#include "hcrep/parallel.hpp"

namespace hcrep::hccell {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent stream per (seed, stream tag, index).
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed ^ (tag * 0xD1B54A32D192ED03ULL)) + index));
}

Complex gaussian(std::mt19937_64& rng, double scale) {
    std::normal_distribution<double> n(0.0, scale);
    double re = n(rng);
    double im = n(rng);
    return {re, im};
}

void check_pq(int p, int q) {
    if (p < 1 || q < 1) throw InvalidInput("p and q must be at least 1");
}

double quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0;
    std::size_t k = static_cast<std::size_t>(std::ceil(q * sorted.size()));
    return sorted[std::clamp<std::size_t>(k, 1, sorted.size()) - 1];
}

Complex det_power(Complex d, int m) {
    // d^-m
    Complex r{1, 0};
    const Complex base = m >= 0 ? Complex(1, 0) / d : d;
    for (int i = 0; i < std::abs(m); ++i) r *= base;
    return r;
}

}  // namespace

ComplexMatrix signature_form(int p, int q) {
    check_pq(p, q);
    ComplexMatrix f = ComplexMatrix::Identity(p + q, p + q);
    for (int i = p; i < p + q; ++i) f(i, i) = -1;
    return f;
}

double form_defect(const ComplexMatrix& g, int p, int q) {
    ComplexMatrix f = signature_form(p, q);
    return (g.adjoint() * f * g - f).norm();
}

namespace {

ComplexMatrix algebra_draw(const GroupSampler& s, std::uint64_t index, std::uint64_t attempt) {
    check_pq(s.p, s.q);
    const int n = s.p + s.q;
    auto rng = stream(s.seed, 1 + (attempt << 8), index);
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = gaussian(rng, s.scale);
    ComplexMatrix x(n, n);
    auto a = m.topLeftCorner(s.p, s.p);
    auto d = m.bottomRightCorner(s.q, s.q);
    auto b = m.topRightCorner(s.p, s.q);
    x.topLeftCorner(s.p, s.p) = (a - a.adjoint()) / 2.0;
    x.bottomRightCorner(s.q, s.q) = (d - d.adjoint()) / 2.0;
    x.topRightCorner(s.p, s.q) = b;
    x.bottomLeftCorner(s.q, s.p) = b.adjoint();
    const Complex tr = x.trace();
    x -= ComplexMatrix::Identity(n, n) * Complex(0, tr.imag() / n);
    return x;
}

ComplexMatrix group_draw(const GroupSampler& s, std::uint64_t index, std::uint64_t attempt) {
    // Extended precision keeps g* F g - F at the rounding level of the result.
    using WideMatrix = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;
    WideMatrix x = algebra_draw(s, index, attempt).cast<std::complex<long double>>();
    return WideMatrix(x.exp()).cast<Complex>();
}

}  // namespace

ComplexMatrix sample_su_pq_algebra(const GroupSampler& s, std::uint64_t index) { return algebra_draw(s, index, 0); }

ComplexMatrix sample_su_pq_element(const GroupSampler& s, std::uint64_t index) {
    // Rounding a large exp(X) to double can leave a defect above the sampler
    // tolerance; such rare draws are replaced by a fresh draw for the index.
    for (std::uint64_t attempt = 0;; ++attempt) {
        ComplexMatrix g = group_draw(s, index, attempt);
        if (form_defect(g, s.p, s.q) <= kSamplerTolerance &&
            std::abs(g.determinant() - Complex(1, 0)) <= kSamplerTolerance)
            return g;
        if (attempt == 1000) throw InternalError("could not draw a form-preserving sample");
    }
}

std::vector<ComplexMatrix> sample_su_pq(const GroupSampler& s, std::size_t n) {
    std::vector<ComplexMatrix> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_su_pq_element(s, i));
    return out;
}

ComplexMatrix sample_borel(int n, std::uint64_t seed, std::uint64_t index) {
    auto rng = stream(seed, 2, index);
    std::normal_distribution<double> g(0.0, 0.5);
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) x[i] = g(rng), y[i] = g(rng);
    double mx = 0, my = 0;
    for (int i = 0; i < n; ++i) mx += x[i] / n, my += y[i] / n;
    ComplexMatrix b = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        b(i, i) = std::exp(Complex(x[i] - mx, y[i] - my));
        for (int j = i + 1; j < n; ++j) b(i, j) = gaussian(rng, 1.0);
    }
    return b;
}

TriangularSample sample_triangular(int n, std::uint64_t seed, std::uint64_t index) {
    auto rng = stream(seed, 3, index);
    TriangularSample t;
    t.n_minus = ComplexMatrix::Identity(n, n);
    t.n_plus = ComplexMatrix::Identity(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            t.n_minus(j, i) = gaussian(rng, 1.0);
            t.n_plus(i, j) = gaussian(rng, 1.0);
        }
    t.h = sample_borel(n, seed ^ 0x5bd1e995ULL, index).diagonal().asDiagonal();
    return t;
}

std::string to_string(CellStatus s) {
    switch (s) {
        case CellStatus::inside: return "inside";
        case CellStatus::outside_cell: return "outside_cell";
        case CellStatus::residual_exceeded: return "residual_exceeded";
    }
    return "unknown";
}

HCCellFactorization hc_factorize(const ComplexMatrix& g, int p, int q, const CellOptions& opts) {
    check_pq(p, q);
    const int n = p + q;
    if (g.rows() != n || g.cols() != n) throw InvalidInput("matrix size must be p+q");
    if (!g.allFinite()) throw InvalidInput("matrix has non-finite entries");
    HCCellFactorization f;
    const ComplexMatrix a = g.topLeftCorner(p, p), b = g.topRightCorner(p, q), c = g.bottomLeftCorner(q, p),
                        d = g.bottomRightCorner(q, q);
    Eigen::PartialPivLU<ComplexMatrix> lu(a);
    f.det_a_abs = std::abs(lu.determinant());
    if (f.det_a_abs < opts.outside_threshold * std::pow(g.norm(), p)) {
        f.status = CellStatus::outside_cell;
        return f;
    }
    const ComplexMatrix ainv_b = lu.solve(b);
    const ComplexMatrix c_ainv = a.transpose().partialPivLu().solve(c.transpose()).transpose();
    f.p_minus = ComplexMatrix::Identity(n, n);
    f.p_minus.bottomLeftCorner(q, p) = c_ainv;
    f.k = ComplexMatrix::Zero(n, n);
    f.k.topLeftCorner(p, p) = a;
    f.k.bottomRightCorner(q, q) = d - c * ainv_b;
    f.p_plus = ComplexMatrix::Identity(n, n);
    f.p_plus.topRightCorner(p, q) = ainv_b;
    f.residual = (f.p_minus * f.k * f.p_plus - g).norm();
    if (!std::isfinite(f.residual)) throw InvalidInput("factorization produced non-finite entries");
    f.status = f.residual <= opts.tol ? CellStatus::inside : CellStatus::residual_exceeded;
    return f;
}

InclusionStats verify_inclusion(const GroupSampler& s, std::size_t n, const CellOptions& opts, unsigned threads) {
    check_pq(s.p, s.q);
    InclusionStats st;
    st.samples = n;
    if (n == 0) return st;
    std::vector<HCCellFactorization> results(n);
    std::vector<double> defects(n);
    std::vector<ComplexMatrix> products(n);
    parallel_for(n, threads, [&](std::size_t i) {
        ComplexMatrix g0 = sample_su_pq_element(s, i);
        defects[i] = form_defect(g0, s.p, s.q);
        products[i] = g0 * sample_borel(s.p + s.q, s.seed, i);
        results[i] = hc_factorize(products[i], s.p, s.q, opts);
    });
    std::vector<double> residuals;
    st.min_det_a = results[0].det_a_abs;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = results[i];
        st.max_form_defect = std::max(st.max_form_defect, defects[i]);
        st.min_det_a = std::min(st.min_det_a, r.det_a_abs);
        if (r.status == CellStatus::inside) ++st.inside;
        if (r.status == CellStatus::outside_cell) ++st.outside;
        if (r.status == CellStatus::residual_exceeded) ++st.residual_exceeded;
        if (r.status != CellStatus::outside_cell) residuals.push_back(r.residual);
        if (r.status != CellStatus::inside && st.failures.size() < 5)
            st.failures.push_back(nlohmann::json{{"index", i},
                                                 {"status", to_string(r.status)},
                                                 {"residual", r.residual},
                                                 {"abs_det_a", r.det_a_abs},
                                                 {"matrix", nlohmann::json::parse(matrix_to_json(products[i]))}}
                                      .dump());
    }
    std::sort(residuals.begin(), residuals.end());
    if (!residuals.empty()) {
        st.min_residual = residuals.front();
        st.max_residual = residuals.back();
        st.median_residual = quantile(residuals, 0.5);
        st.p90_residual = quantile(residuals, 0.9);
        st.p99_residual = quantile(residuals, 0.99);
    }
    return st;
}

IwasawaDecomposition iwasawa(const ComplexMatrix& g) {
    if (g.rows() != g.cols() || g.rows() == 0) throw InvalidInput("matrix must be square and nonempty");
    const int n = static_cast<int>(g.rows());
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    ComplexMatrix q = qr.householderQ();
    double scale = std::max(g.norm(), 1.0);
    IwasawaDecomposition out;
    out.a = ComplexMatrix::Zero(n, n);
    ComplexMatrix phase = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        double mag = std::abs(r(i, i));
        if (mag < 1e-13 * scale) throw InvalidInput("matrix is singular");
        phase(i, i) = r(i, i) / mag;
        out.a(i, i) = mag;
    }
    // g = (q phase) (phase^-1 r), and phase^-1 r has a positive diagonal.
    out.u = q * phase;
    ComplexMatrix rp = phase.adjoint() * r;
    out.n_plus = out.a.diagonal().cwiseInverse().asDiagonal() * rp;
    out.residual = (out.u * out.a * out.n_plus - g).norm();
    return out;
}

PsiValue evaluate_psi(const ComplexMatrix& g, int m, int p, int q, const CellOptions& opts) {
    auto f = hc_factorize(g, p, q, opts);
    if (f.status == CellStatus::outside_cell) return {};
    return {true, det_power(f.k.topLeftCorner(p, p).determinant(), m)};
}

Complex chi_lambda(const ComplexMatrix& b, int m, int p) {
    if (p < 1 || p > b.rows()) throw InvalidInput("p out of range");
    Complex d{1, 0};
    for (int i = 0; i < p; ++i) d *= b(i, i);
    return det_power(d, m);
}

PsiStats verify_psi(const GroupSampler& s, int m, std::size_t n, unsigned threads) {
    check_pq(s.p, s.q);
    const int dim = s.p + s.q;
    PsiStats st;
    st.samples = n;
    std::vector<double> ext(n), eqv(n);
    std::vector<char> outside(n, 0);
    CellOptions loose;
    loose.tol = 1e300;  // only the cell test matters here
    parallel_for(n, threads, [&](std::size_t i) {
        auto t = sample_triangular(dim, s.seed, i);
        auto v = evaluate_psi(t.product(), m, s.p, s.q, loose);
        Complex chi = chi_lambda(t.h, m, s.p);
        ComplexMatrix g0 = sample_su_pq_element(s, i), b = sample_borel(dim, s.seed, i);
        auto w0 = evaluate_psi(g0, m, s.p, s.q, loose);
        auto w = evaluate_psi(g0 * b, m, s.p, s.q, loose);
        if (!v.inside || !w0.inside || !w.inside) {
            outside[i] = 1;
            return;
        }
        ext[i] = std::abs(v.value - chi) / std::abs(chi);
        Complex expect = w0.value * chi_lambda(b, m, s.p);
        eqv[i] = std::abs(w.value - expect) / std::abs(expect);
    });
    for (std::size_t i = 0; i < n; ++i) {
        st.outside += outside[i];
        st.max_extension_residual = std::max(st.max_extension_residual, ext[i]);
        st.max_equivariance_residual = std::max(st.max_equivariance_residual, eqv[i]);
    }
    return st;
}

ComplexMatrix cartan_involution(const ComplexMatrix& x, int p, int q) {
    ComplexMatrix f = signature_form(p, q);
    return f * x * f;
}

ComplexMatrix transpose_involution(const ComplexMatrix& x, int p, int q) {
    ComplexMatrix f = signature_form(p, q);
    return -(f * x.transpose() * f);
}

ComplexMatrix real_form_involution(const ComplexMatrix& x, int p, int q) {
    ComplexMatrix f = signature_form(p, q);
    return -(f * x.adjoint() * f);
}

std::string matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows.dump();
}

}  // namespace hcrep::hccell
