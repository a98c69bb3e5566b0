#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hcrep::hccell {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Signature form F = diag(I_p, -I_q).
ComplexMatrix signature_form(int p, int q);

/// ||g* F g - F||_F
double form_defect(const ComplexMatrix& g, int p, int q);

/// Every sampled g satisfies ||g* F g - F||_F <= kSamplerTolerance and
/// |det g - 1| <= kSamplerTolerance.
inline constexpr double kSamplerTolerance = 1e-12;

/// Random elements of SU(p,q) as exp(X) for X in su(p,q) with Gaussian
/// coordinates of standard deviation `scale`. Sample i depends only on
/// (p, q, seed, i).
struct GroupSampler {
    int p = 1;
    int q = 1;
    std::uint64_t seed = 0;
    double scale = 1.0;
};

/// Random element of su(p,q): [[A, B], [B*, D]] with A, D anti-Hermitian and
/// trace zero.
ComplexMatrix sample_su_pq_algebra(const GroupSampler& s, std::uint64_t index);
/// exp of an algebra sample; the rare draw whose rounded exponential misses
/// the tolerance is redrawn from a fresh stream for the same index.
ComplexMatrix sample_su_pq_element(const GroupSampler& s, std::uint64_t index);
std::vector<ComplexMatrix> sample_su_pq(const GroupSampler& s, std::size_t n);

/// Random upper-triangular b with determinant 1: diagonal exp(x + iy) with
/// zero-sum Gaussian x, y of deviation 1/2, Gaussian entries above.
ComplexMatrix sample_borel(int n, std::uint64_t seed, std::uint64_t index);

/// Random n^- h n^+ with n^- unit lower triangular, h diagonal with
/// determinant 1, n^+ unit upper triangular.
struct TriangularSample {
    ComplexMatrix n_minus, h, n_plus;
    ComplexMatrix product() const { return n_minus * h * n_plus; }
};
TriangularSample sample_triangular(int n, std::uint64_t seed, std::uint64_t index);

enum class CellStatus { inside, outside_cell, residual_exceeded };
std::string to_string(CellStatus s);

struct CellOptions {
    double tol = 1e-10;
    /// g is outside the cell when |det A| < outside_threshold * ||g||_F^p.
    double outside_threshold = 1e-8;
};

/// g = p^- k p^+ with p^- = [[I,0],[C A^-1, I]], k = [[A,0],[0, D - C A^-1 B]],
/// p^+ = [[I, A^-1 B],[0, I]] for g = [[A, B],[C, D]] and A of size p.
struct HCCellFactorization {
    CellStatus status = CellStatus::outside_cell;
    ComplexMatrix p_minus, k, p_plus;
    double residual = 0;   // ||p^- k p^+ - g||_F
    double det_a_abs = 0;  // |det A|
};

HCCellFactorization hc_factorize(const ComplexMatrix& g, int p, int q, const CellOptions& opts = {});

struct InclusionStats {
    std::size_t samples = 0;
    std::size_t inside = 0;
    std::size_t outside = 0;
    std::size_t residual_exceeded = 0;
    double min_residual = 0, median_residual = 0, p90_residual = 0, p99_residual = 0, max_residual = 0;
    double min_det_a = 0;
    double max_form_defect = 0;
    /// Serialized witness matrices of failed samples (first few).
    std::vector<std::string> failures;
    bool holds() const { return inside == samples; }
};

/// Factorizes g0 * b for n sampled g0 in SU(p,q) and random b in B+. threads
/// = 0 uses the hardware concurrency; results do not depend on it.
InclusionStats verify_inclusion(const GroupSampler& s, std::size_t n, const CellOptions& opts = {},
                                unsigned threads = 0);

/// g = u a n with u unitary, a positive diagonal, n unit upper triangular.
struct IwasawaDecomposition {
    ComplexMatrix u, a, n_plus;
    double residual = 0;
};
/// Throws InvalidInput for singular g.
IwasawaDecomposition iwasawa(const ComplexMatrix& g);

struct PsiValue {
    bool inside = false;
    Complex value{0, 0};
};
/// psi(g) = det(A)^-m for g in the cell.
PsiValue evaluate_psi(const ComplexMatrix& g, int m, int p, int q, const CellOptions& opts = {});
/// chi(b) = (b_11 ... b_pp)^-m on B+ (and on the diagonal torus).
Complex chi_lambda(const ComplexMatrix& b, int m, int p);

struct PsiStats {
    std::size_t samples = 0;
    std::size_t outside = 0;
    double max_extension_residual = 0;    // |psi(n- h n+) - chi(h)| / |chi(h)|
    double max_equivariance_residual = 0; // |psi(g0 b) - psi(g0) chi(b)| / |psi(g0) chi(b)|
};
PsiStats verify_psi(const GroupSampler& s, int m, std::size_t n, unsigned threads = 0);

/// X -> F X F; on su(p,q) its fixed points are s(u(p) + u(q)).
ComplexMatrix cartan_involution(const ComplexMatrix& x, int p, int q);
/// X -> -F X^T F on sl(n); its fixed points in sl(n, R) are so(p, q).
ComplexMatrix transpose_involution(const ComplexMatrix& x, int p, int q);
/// X -> -F X* F; su(p,q) is its fixed-point set in sl(n, C).
ComplexMatrix real_form_involution(const ComplexMatrix& x, int p, int q);

/// Row-major array of [re, im] pairs.
std::string matrix_to_json(const ComplexMatrix& m);

}  // namespace hcrep::hccell
