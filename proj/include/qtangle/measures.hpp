// measures.hpp — entanglement quantification for the tripartite system:
// Wootters concurrence, negativity under any bipartition, total entanglement,
// the CKW monogamy residual, and the closed-form counterparts of each.

#pragma once

#include <qtangle/linalg.hpp>
#include <qtangle/model.hpp>

#include <cmath>
#include <limits>

namespace qtangle {

// The subsystem index whose bra/ket indices are partially transposed.
struct Bipartition {
    int moved;
};

// Index conventions for the 8-dim model state.
inline constexpr int kQubit1 = 0;
inline constexpr int kQubit2 = 1;
inline constexpr int kCavity = 2;

enum class Regime { lossless, dissipative };

struct EvalOptions {
    H1Variant h1 = H1Variant::corrected;
    bool verbatim_chi = false;  // use the quoted dissipative |chi|^2 instead of the overlap
};

// ------------------------------ numeric side --------------------------------

namespace detail {

inline void check_density(const ComplexMatrix& rho, const char* who) {
    if (hermiticity_defect(rho) > 1e-8)
        throw std::invalid_argument(std::string(who) + ": input is not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-8)
        throw std::invalid_argument(std::string(who) + ": input trace differs from 1");
}

inline double purity(const ComplexMatrix& rho) { return (rho * rho).trace().real(); }

// Trace out every subsystem except `keep`.
inline ComplexMatrix reduce_to(const ComplexMatrix& rho, const DimTag& tag, int keep) {
    ComplexMatrix cur = rho;
    std::vector<int> dims = tag.dims;
    int target = keep;
    while (static_cast<int>(dims.size()) > 1) {
        int drop = (target == 0) ? static_cast<int>(dims.size()) - 1 : 0;
        cur = partial_trace(cur, DimTag{dims}, drop);
        dims.erase(dims.begin() + drop);
        if (drop < target) --target;
    }
    return cur;
}

}  // namespace detail

// Wootters concurrence of a two-qubit density matrix:
// max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) with l_i the descending
// spectrum of R = (sy x sy) rho* (sy x sy) rho.
inline double concurrence(const ComplexMatrix& rho4) {
    if (rho4.rows() != 4 || rho4.cols() != 4)
        throw std::invalid_argument("concurrence: expected a 4x4 density matrix");
    detail::check_density(rho4, "concurrence");
    static const ComplexMatrix yy = kron(sigma_y(), sigma_y());
    const ComplexMatrix rho_tilde = yy * rho4.conjugate() * yy;
    auto ev = general_eigenvalues_hermitian_product(rho_tilde, rho4);  // ascending
    // algebraically-zero eigenvalues come back as O(eps) noise which the square
    // root would amplify; treat anything within the clamp window as degenerate 0
    for (double& v : ev)
        if (v < kPsdClampTol) v = 0.0;
    const double c = std::sqrt(ev[3]) - std::sqrt(ev[2]) - std::sqrt(ev[1]) - std::sqrt(ev[0]);
    return std::max(0.0, c);
}

// Sum of |negative eigenvalues| of the partial transpose in subsystem
// part.moved. Zero means separable or bound-entangled; 1/2 is maximal here.
inline double negativity(const ComplexMatrix& rho, const DimTag& tag, Bipartition part) {
    detail::check_density(rho, "negativity");
    auto ev = hermitian_eigenvalues(partial_transpose(rho, tag, part.moved));
    double neg = 0.0;
    for (double v : ev)
        if (v < 0.0) neg -= v;
    return neg;
}

// TE = Neg(Q1C|Q2) + Neg(Q2C|Q1) + Neg(Q1Q2|C), in [0, 3/2].
inline double total_entanglement(const ComplexMatrix& rho8) {
    const DimTag tag{2, 2, 2};
    return negativity(rho8, tag, {kQubit2}) + negativity(rho8, tag, {kQubit1}) +
           negativity(rho8, tag, {kCavity});
}

// One-vs-rest tangle for pure states: C_{A|rest} = sqrt(2 (1 - Tr rho_A^2)).
// Mixed input is rejected (the convex roof is out of scope).
inline double tangle_A_BC_pure(const ComplexMatrix& rho, const DimTag& tag, int a) {
    detail::check_density(rho, "tangle_A_BC_pure");
    if (std::abs(detail::purity(rho) - 1.0) > 1e-8)
        throw std::domain_error("tangle_A_BC_pure: input state is not pure");
    const ComplexMatrix ra = detail::reduce_to(rho, tag, a);
    double t2;
    if (ra.rows() == 2) {
        // for a trace-1 2x2 marginal, 2 (1 - Tr rho_A^2) = 4 det rho_A,
        // which avoids the cancellation in 1 - purity near pure marginals
        t2 = 4.0 * (ra(0, 0).real() * ra(1, 1).real() - std::norm(ra(0, 1)));
    } else {
        t2 = 2.0 * (1.0 - detail::purity(ra));
    }
    return std::clamp(std::sqrt(std::max(0.0, t2)), 0.0, 1.0);
}

// CKW residual with the cavity singled out:
// C^2_{C|Q1Q2} - C^2_{C Q1} - C^2_{C Q2}  (>= 0 up to numerical slack).
// For this state family the pairwise terms vanish, so the residual is the
// three-tangle.
inline double monogamy_residual(const ComplexMatrix& rho8) {
    const DimTag tag{2, 2, 2};
    const double tangle = tangle_A_BC_pure(rho8, tag, kCavity);
    const double c_cq1 = concurrence(partial_trace(rho8, tag, kQubit2));
    const double c_cq2 = concurrence(partial_trace(rho8, tag, kQubit1));
    return tangle * tangle - c_cq1 * c_cq1 - c_cq2 * c_cq2;
}

// ----------------------------- closed forms ----------------------------------

namespace detail {

inline double chi_sq(const SystemParams& p, double t, const EvalOptions& opt) {
    return opt.verbatim_chi ? chi_sq_verbatim_dissipative(p, t) : std::norm(chi(p, t));
}

// 1 - x - e^{-x}, series-protected against cancellation at small x
inline double one_minus_x_minus_exp(double x) {
    if (std::abs(x) < 1e-4) return -x * x / 2.0 + x * x * x / 6.0 - x * x * x * x / 24.0;
    return 1.0 - x - std::exp(-x);
}

}  // namespace detail

// Neg(Q1Q2|C). Lossless: (1/2) sqrt(1 - e^{8 g^2 (cos dt - 1)/d^2}).
// Dissipative: (1/4)(e^{h1} - 1) + (1/4) sqrt(1 - 4 e^{h1}|chi|^2 + 2 e^{h1} + e^{2 h1}),
// which reduces to the lossless form at kappa = 0.
inline double closed_form_neg_qq_c(const SystemParams& p, double t, Regime regime,
                                   const EvalOptions& opt = {}) {
    const double g = p.g();
    if (regime == Regime::lossless) {
        if (p.kappa != 0.0)
            throw std::invalid_argument("closed_form_neg_qq_c: lossless regime requires kappa=0");
        const double expo = p.delta * p.delta < 1e-24
                                ? -4.0 * g * g * t * t
                                : 8.0 * g * g * (std::cos(p.delta * t) - 1.0) / (p.delta * p.delta);
        return 0.5 * std::sqrt(std::max(0.0, 1.0 - std::exp(expo)));
    }
    const double e = std::exp(h1(p, t, opt.h1));
    const double c2 = detail::chi_sq(p, t, opt);
    const double rad = 1.0 - 4.0 * e * c2 + 2.0 * e + e * e;
    return 0.25 * (e - 1.0) + 0.25 * std::sqrt(std::max(0.0, rad));
}

// Neg(Q1C|Q2) = Neg(Q2C|Q1): 1/2 lossless, (1/2) e^{h1} with dissipation.
inline double closed_form_neg_qic_qj(const SystemParams& p, double t, Regime regime,
                                     const EvalOptions& opt = {}) {
    if (regime == Regime::lossless) {
        if (p.kappa != 0.0)
            throw std::invalid_argument("closed_form_neg_qic_qj: lossless regime requires kappa=0");
        return 0.5;
    }
    return 0.5 * std::exp(h1(p, t, opt.h1));
}

// Qubit-qubit concurrence pair: C(t) = e^{-2 (g1+g2)^2 t^2} (lossless, the
// delta -> 0 law) and C_k(t) = exp(4 (g1+g2)^2 (1 - k t - e^{-k t})/k^2),
// which recovers C(t) as kappa -> 0.
inline double closed_form_concurrence(const SystemParams& p, double t, Regime regime) {
    const double g = p.g();
    if (regime == Regime::lossless || p.kappa == 0.0) return std::exp(-2.0 * g * g * t * t);
    const double x = p.kappa * t;
    return std::exp(4.0 * g * g * detail::one_minus_x_minus_exp(x) / (p.kappa * p.kappa));
}

// Dissipative three-tangle tau_k = e^{h1} sqrt(1 - |chi|^2). Note its
// kappa -> 0 limit sqrt(1 - |chi|^2) differs from the lossless residual
// 1 - |chi|^2; both are reported under distinct names and neither is
// adjudicated here.
inline double three_tangle_kappa(const SystemParams& p, double t, const EvalOptions& opt = {}) {
    const double c2 = detail::chi_sq(p, t, opt);
    return std::exp(h1(p, t, opt.h1)) * std::sqrt(std::max(0.0, 1.0 - c2));
}

// ------------------------------- report --------------------------------------

// All measures evaluated at one instant: numeric values from the assembled
// 8x8 matrix next to their closed-form counterparts. Pure-state-only fields
// are NaN when dissipation has mixed the state.
struct EntanglementReport {
    double t = 0;

    double neg_qq_c = 0, neg_q1c_q2 = 0, neg_q2c_q1 = 0;
    double concurrence_qq = 0;
    double total_entanglement = 0;
    double tangle_c_q1q2 = 0;
    double three_tangle = 0;
    double monogamy_residual = 0;

    double cf_neg_qq_c = 0, cf_neg_q1c_q2 = 0, cf_neg_q2c_q1 = 0;
    double cf_concurrence_qq = 0;
    double cf_total_entanglement = 0;
    double cf_tangle_c_q1q2 = 0;
    double cf_three_tangle = 0;        // lossless residual 1 - |chi|^2 (NaN for kappa > 0)
    double cf_three_tangle_kappa = 0;  // e^{h1} sqrt(1 - |chi|^2)
};

inline EntanglementReport evaluate_report(const SystemParams& p, double t,
                                          const EvalOptions& opt = {}) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const DimTag tag{2, 2, 2};
    EntanglementReport r;
    r.t = t;

    const TripartiteState st = assemble_rho8(p, t, opt.h1);
    r.neg_qq_c = negativity(st.rho, tag, {kCavity});
    r.neg_q1c_q2 = negativity(st.rho, tag, {kQubit2});
    r.neg_q2c_q1 = negativity(st.rho, tag, {kQubit1});
    r.concurrence_qq = concurrence(partial_trace(st.rho, tag, kCavity));
    r.total_entanglement = r.neg_qq_c + r.neg_q1c_q2 + r.neg_q2c_q1;
    if (std::abs(detail::purity(st.rho) - 1.0) <= 1e-8) {
        r.tangle_c_q1q2 = tangle_A_BC_pure(st.rho, tag, kCavity);
        r.monogamy_residual = monogamy_residual(st.rho);
        r.three_tangle = r.monogamy_residual;
    } else {
        r.tangle_c_q1q2 = r.monogamy_residual = r.three_tangle = nan;
    }

    const double e = std::exp(h1(p, t, opt.h1));
    const double c2 = detail::chi_sq(p, t, opt);
    r.cf_neg_qq_c = closed_form_neg_qq_c(p, t, Regime::dissipative, opt);
    r.cf_neg_q1c_q2 = closed_form_neg_qic_qj(p, t, Regime::dissipative, opt);
    r.cf_neg_q2c_q1 = r.cf_neg_q1c_q2;
    r.cf_concurrence_qq = e * std::sqrt(c2);
    r.cf_total_entanglement = r.cf_neg_qq_c + r.cf_neg_q1c_q2 + r.cf_neg_q2c_q1;
    r.cf_tangle_c_q1q2 = p.kappa == 0.0 ? std::sqrt(std::max(0.0, 1.0 - c2)) : nan;
    r.cf_three_tangle = p.kappa == 0.0 ? 1.0 - c2 : nan;
    r.cf_three_tangle_kappa = three_tangle_kappa(p, t, opt);
    return r;
}

}  // namespace qtangle
