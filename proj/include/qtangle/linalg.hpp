// linalg.hpp — dense complex linear algebra for small multipartite systems:
// Kronecker products, partial trace / partial transpose over a tagged tensor
// factor, and Hermitian spectra.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtangle {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-10;   // max|M - M^dag| accepted by eigensolvers
inline constexpr double kPsdClampTol  = 1e-12;   // eigenvalues in [-clamp, 0] are rounded to 0
inline constexpr double kPsdErrorTol  = -1e-10;  // below this a PSD contract is violated

// --------------------------- tensor-structure tag ---------------------------

// Ordered subsystem dimensions of a multipartite operator, e.g. {2,2,2} for
// qubit (x) qubit (x) reduced cavity, or {2,2,N} for the truncated-Fock oracle.
struct DimTag {
    std::vector<int> dims;

    DimTag(std::initializer_list<int> d) : dims(d) {}
    explicit DimTag(std::vector<int> d) : dims(std::move(d)) {}

    int total() const {
        return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
    }
    int size() const { return static_cast<int>(dims.size()); }

    void check_square(const ComplexMatrix& m) const {
        if (m.rows() != m.cols())
            throw std::invalid_argument("DimTag: matrix is not square");
        if (m.rows() != total())
            throw std::invalid_argument("DimTag: dims product " + std::to_string(total()) +
                                        " != matrix dimension " + std::to_string(m.rows()));
    }
    void check_subsystem(int k) const {
        if (k < 0 || k >= size())
            throw std::invalid_argument("DimTag: subsystem index " + std::to_string(k) +
                                        " out of range");
    }
    // product of dims strictly before / strictly after subsystem k
    int stride_before(int k) const {
        return std::accumulate(dims.begin(), dims.begin() + k, 1, std::multiplies<int>());
    }
    int stride_after(int k) const {
        return std::accumulate(dims.begin() + k + 1, dims.end(), 1, std::multiplies<int>());
    }
};

// --------------------------- small fixed operators --------------------------

inline ComplexMatrix identity(int n) { return ComplexMatrix::Identity(n, n); }

inline ComplexMatrix sigma_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline ComplexMatrix sigma_y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

inline ComplexMatrix sigma_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

// ------------------------------- operations ---------------------------------

inline double hermiticity_defect(const ComplexMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Trace out subsystem k; the result is tagged by the remaining dims in order.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, const DimTag& tag, int k) {
    tag.check_square(rho);
    tag.check_subsystem(k);
    const int pre = tag.stride_before(k), d = tag.dims[k], post = tag.stride_after(k);
    ComplexMatrix out = ComplexMatrix::Zero(pre * post, pre * post);
    for (int p = 0; p < pre; ++p)
        for (int q = 0; q < pre; ++q)
            for (int x = 0; x < d; ++x)
                for (int r = 0; r < post; ++r)
                    for (int s = 0; s < post; ++s)
                        out(p * post + r, q * post + s) +=
                            rho((p * d + x) * post + r, (q * d + x) * post + s);
    return out;
}

// Transpose the bra/ket indices of subsystem k only. Involutive and exact
// (a pure re-indexing; no arithmetic).
inline ComplexMatrix partial_transpose(const ComplexMatrix& rho, const DimTag& tag, int k) {
    tag.check_square(rho);
    tag.check_subsystem(k);
    const int pre = tag.stride_before(k), d = tag.dims[k], post = tag.stride_after(k);
    ComplexMatrix out(rho.rows(), rho.cols());
    for (int p = 0; p < pre; ++p)
        for (int q = 0; q < pre; ++q)
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y)
                    for (int r = 0; r < post; ++r)
                        for (int s = 0; s < post; ++s)
                            out((p * d + y) * post + r, (q * d + x) * post + s) =
                                rho((p * d + x) * post + r, (q * d + y) * post + s);
    return out;
}

namespace detail {

// Partition indices into connected components of the nonzero pattern of m
// (pattern must be symmetric, which symmetrization guarantees). Structurally
// decoupled blocks are solved independently; exact for block-diagonal input
// up to permutation. Oracle-sized partial transposes are dominated by such
// blocks, cutting the O(n^3) solve cost several-fold.
inline std::vector<std::vector<int>> nonzero_components(const ComplexMatrix& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) != Complex(0.0, 0.0)) {
                int a = find(i), b = find(j);
                if (a != b) parent[a] = b;
            }
    std::vector<std::vector<int>> comps(n);
    for (int i = 0; i < n; ++i) comps[find(i)].push_back(i);
    comps.erase(std::remove_if(comps.begin(), comps.end(),
                               [](const auto& c) { return c.empty(); }),
                comps.end());
    return comps;
}

inline void solve_hermitian_into(const ComplexMatrix& h, std::vector<double>& out) {
    const auto comps = nonzero_components(h);
    for (const auto& c : comps) {
        if (c.size() == 1) {
            out.push_back(h(c[0], c[0]).real());
            continue;
        }
        ComplexMatrix sub(c.size(), c.size());
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < c.size(); ++j)
                sub(i, j) = h(c[i], c[j]);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sub, Eigen::EigenvaluesOnly);
        const auto& ev = es.eigenvalues();
        out.insert(out.end(), ev.data(), ev.data() + ev.size());
    }
}

}  // namespace detail

// Ascending real eigenvalues of a Hermitian matrix. Input must be Hermitian
// within kHermitianTol; it is symmetrized before solving.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
    const double defect = hermiticity_defect(m);
    if (defect > kHermitianTol)
        throw std::invalid_argument("hermitian_eigenvalues: Hermiticity defect " +
                                    std::to_string(defect) + " exceeds tolerance");
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    std::vector<double> ev;
    ev.reserve(m.rows());
    detail::solve_hermitian_into(h, ev);
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Hermitian PSD square root via eigendecomposition.
inline ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (a + a.adjoint()));
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < kPsdErrorTol)
            throw std::invalid_argument("psd_sqrt: negative eigenvalue " + std::to_string(ev(i)));
        ev(i) = std::sqrt(std::max(0.0, ev(i)));
    }
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

// Spectrum of the (generally non-Hermitian) product a*b for Hermitian PSD a, b.
// Solved as the equivalent Hermitian problem on sqrt(a)*b*sqrt(a), whose
// nonzero spectrum coincides with that of a*b. Returns ascending non-negative
// values; values in [kPsdErrorTol, 0) are clamped to 0, anything lower is a
// contract violation (malformed density matrix upstream).
inline std::vector<double> general_eigenvalues_hermitian_product(const ComplexMatrix& a,
                                                                 const ComplexMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("general_eigenvalues_hermitian_product: shape mismatch");
    if (hermiticity_defect(a) > kHermitianTol || hermiticity_defect(b) > kHermitianTol)
        throw std::invalid_argument("general_eigenvalues_hermitian_product: inputs not Hermitian");
    const ComplexMatrix ra = psd_sqrt(a);
    ComplexMatrix h = ra * b * ra;
    h = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(),
                            es.eigenvalues().data() + es.eigenvalues().size());
    for (double& v : out) {
        if (v < kPsdErrorTol)
            throw std::invalid_argument(
                "general_eigenvalues_hermitian_product: eigenvalue " + std::to_string(v) +
                " below PSD tolerance");
        v = std::max(0.0, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qtangle
