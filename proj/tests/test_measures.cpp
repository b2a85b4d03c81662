#include <catch2/catch_amalgamated.hpp>

#include <qtangle/measures.hpp>

#include <numbers>
#include <random>

using namespace qtangle;
using Catch::Approx;
using std::numbers::pi;

namespace {

std::mt19937 rng(424242);

ComplexMatrix bell4() {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
    return psi * psi.adjoint();
}

ComplexMatrix ghz8() {
    ComplexVector psi = ComplexVector::Zero(8);
    psi(0) = psi(7) = 1.0 / std::sqrt(2.0);
    return psi * psi.adjoint();
}

ComplexMatrix x_state(Complex eps) {
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = rho(3, 3) = 0.5;
    rho(0, 3) = 0.5 * eps;
    rho(3, 0) = std::conj(rho(0, 3));
    return rho;
}

SystemParams lossless_params(double delta) { return {0.1, 0.1, delta, 0.0, 0.0}; }

}  // namespace

TEST_CASE("concurrence of the reference states") {
    REQUIRE(concurrence(bell4()) == Approx(1.0).margin(1e-12));
    REQUIRE(concurrence(ComplexMatrix(0.25 * identity(4))) == Approx(0.0).margin(1e-12));

    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const double r = u(rng);
        const Complex eps = std::polar(r, 2 * pi * u(rng));
        REQUIRE(concurrence(x_state(eps)) == Approx(r).margin(1e-12));
    }
}

TEST_CASE("concurrence rejects non-density input") {
    REQUIRE_THROWS_AS(concurrence(ComplexMatrix(identity(4))), std::invalid_argument);
    ComplexMatrix nh = ComplexMatrix::Zero(4, 4);
    nh(0, 1) = 1.0;
    REQUIRE_THROWS_AS(concurrence(nh), std::invalid_argument);
}

TEST_CASE("negativity of product and Bell-cavity states") {
    ComplexMatrix up = ComplexMatrix::Zero(2, 2);
    up(0, 0) = 1.0;
    const ComplexMatrix rho = kron(bell4(), up);
    const DimTag tag{2, 2, 2};
    REQUIRE(negativity(rho, tag, {kCavity}) == Approx(0.0).margin(1e-12));
    REQUIRE(negativity(rho, tag, {kQubit1}) == Approx(0.5).margin(1e-12));
    REQUIRE(negativity(rho, tag, {kQubit2}) == Approx(0.5).margin(1e-12));
}

TEST_CASE("GHZ is maximally tripartite entangled") {
    const ComplexMatrix rho = ghz8();
    const DimTag tag{2, 2, 2};
    for (int s : {0, 1, 2}) REQUIRE(negativity(rho, tag, {s}) == Approx(0.5).margin(1e-12));
    REQUIRE(total_entanglement(rho) == Approx(1.5).margin(1e-12));
    for (int s : {0, 1, 2}) REQUIRE(tangle_A_BC_pure(rho, tag, s) == Approx(1.0).margin(1e-12));
    REQUIRE(monogamy_residual(rho) == Approx(1.0).margin(1e-12));
}

TEST_CASE("the model's cavity partial transpose has exactly one negative eigenvalue") {
    SystemParams p = lossless_params(1.0);
    const auto st = assemble_rho8(p, pi / p.delta);
    auto ev = hermitian_eigenvalues(partial_transpose(st.rho, st.tag, kCavity));
    int negatives = 0;
    for (double v : ev)
        if (v < -1e-12) ++negatives;
    REQUIRE(negatives == 1);
}

TEST_CASE("total entanglement of the model: 1 at t=0, Neg+1 without dissipation") {
    SystemParams p = lossless_params(0.2);
    REQUIRE(total_entanglement(assemble_rho8(p, 0.0).rho) == Approx(1.0).margin(1e-9));
    for (int i = 0; i <= 20; ++i) {
        const double t = 2 * pi / p.delta * i / 20.0;
        const ComplexMatrix rho = assemble_rho8(p, t).rho;
        const double te = total_entanglement(rho);
        const double neg_c = negativity(rho, DimTag{2, 2, 2}, {kCavity});
        REQUIRE(te == Approx(neg_c + 1.0).margin(1e-9));
    }
}

TEST_CASE("tangle rejects mixed states and vanishes on products") {
    ComplexMatrix up = ComplexMatrix::Zero(2, 2);
    up(0, 0) = 1.0;
    const DimTag tag{2, 2, 2};
    REQUIRE(tangle_A_BC_pure(kron(bell4(), up), tag, kCavity) == Approx(0.0).margin(1e-9));

    SystemParams p{0.1, 0.1, 0.3, 0.1, 0.0};  // dissipative: mixed at t > 0
    const auto st = assemble_rho8(p, 5.0);
    REQUIRE_THROWS_AS(tangle_A_BC_pure(st.rho, tag, kCavity), std::domain_error);
}

TEST_CASE("cavity tangle of the model matches the closed form") {
    SystemParams p = lossless_params(0.4);
    const double g = p.g();
    for (int i = 1; i <= 12; ++i) {
        const double t = 2 * pi / p.delta * i / 12.0;
        const auto st = assemble_rho8(p, t);
        const double expected = std::sqrt(
            1.0 - std::exp(8 * g * g * (std::cos(p.delta * t) - 1) / (p.delta * p.delta)));
        REQUIRE(tangle_A_BC_pure(st.rho, st.tag, kCavity) == Approx(expected).margin(1e-9));
    }
}

TEST_CASE("monogamy residual equals the lossless three-tangle of the model") {
    SystemParams p = lossless_params(0.2);
    const double g = p.g();
    for (int i = 0; i <= 15; ++i) {
        const double t = 2 * pi / p.delta * i / 15.0;
        const ComplexMatrix rho = assemble_rho8(p, t).rho;
        const double expected =
            1.0 - std::exp(8 * g * g * (std::cos(p.delta * t) - 1) / (p.delta * p.delta));
        REQUIRE(monogamy_residual(rho) == Approx(expected).margin(1e-9));
        // pairwise cavity-qubit concurrences vanish identically
        REQUIRE(concurrence(partial_trace(rho, DimTag{2, 2, 2}, kQubit2)) ==
                Approx(0.0).margin(1e-9));
        REQUIRE(concurrence(partial_trace(rho, DimTag{2, 2, 2}, kQubit1)) ==
                Approx(0.0).margin(1e-9));
    }
}

TEST_CASE("closed-form Neg(Q1Q2|C): zeros, the frozen peak, and revival nulls") {
    SystemParams p = lossless_params(1.0);
    REQUIRE(closed_form_neg_qq_c(p, 0.0, Regime::lossless) == Approx(0.0).margin(1e-12));
    REQUIRE(closed_form_neg_qq_c(p, 0.0, Regime::dissipative) == Approx(0.0).margin(1e-12));
    REQUIRE(closed_form_neg_qq_c(p, pi / p.delta, Regime::lossless) ==
            Approx(0.34376866347769086).margin(1e-12));
    for (int n = 1; n <= 3; ++n)
        REQUIRE(closed_form_neg_qq_c(p, 2 * pi * n / p.delta, Regime::lossless) ==
                Approx(0.0).margin(1e-9));

    SystemParams diss{0.1, 0.1, 0.3, 0.2, 0.0};
    REQUIRE_THROWS_AS(closed_form_neg_qq_c(diss, 1.0, Regime::lossless), std::invalid_argument);
}

TEST_CASE("dissipative Neg(Q1Q2|C) reduces to the lossless form at kappa=0") {
    SystemParams p = lossless_params(0.35);
    for (int i = 0; i <= 40; ++i) {
        const double t = 2 * pi / p.delta * i / 40.0;
        REQUIRE(closed_form_neg_qq_c(p, t, Regime::dissipative) ==
                Approx(closed_form_neg_qq_c(p, t, Regime::lossless)).margin(1e-12));
    }
}

TEST_CASE("closed-form Neg(QiC|Qj)") {
    SystemParams p = lossless_params(0.2);
    REQUIRE(closed_form_neg_qic_qj(p, 13.0, Regime::lossless) == 0.5);

    SystemParams diss{0.1, 0.1, 0.3, 0.1, 0.0};
    REQUIRE(closed_form_neg_qic_qj(diss, 0.0, Regime::dissipative) == Approx(0.5).margin(1e-15));
    const double g2 = diss.g() * diss.g();
    const double k2 = diss.kappa * diss.kappa + diss.delta * diss.delta;
    REQUIRE(closed_form_neg_qic_qj(diss, 0.0, Regime::dissipative, {H1Variant::paper, false}) ==
            Approx(0.5 * std::exp(-8 * g2 * diss.kappa * diss.kappa / (k2 * k2))).margin(1e-12));
    REQUIRE(closed_form_neg_qic_qj(diss, 500.0, Regime::dissipative) < 1e-8);
}

TEST_CASE("concurrence pair: Gaussian law and its kappa -> 0 limit") {
    SystemParams p{0.1, 0.1, 0.0, 0.0, 0.0};
    REQUIRE(closed_form_concurrence(p, 0.0, Regime::lossless) == 1.0);
    SystemParams diss = p;
    diss.kappa = 0.1;
    REQUIRE(closed_form_concurrence(diss, 0.0, Regime::dissipative) == 1.0);

    // convergence is O(kappa t / 3) relative in the exponent -2 g^2 t^2
    diss.kappa = 1e-6;
    for (double t : {1.0, 4.0, 9.0}) {
        const double tol = 2.0 * p.g() * p.g() * t * t * diss.kappa * t;  // exponent * kt/3, padded
        REQUIRE(closed_form_concurrence(diss, t, Regime::dissipative) ==
                Approx(closed_form_concurrence(p, t, Regime::lossless)).epsilon(tol));
    }
    diss.kappa = 1e-8;
    REQUIRE(closed_form_concurrence(diss, 4.0, Regime::dissipative) ==
            Approx(closed_form_concurrence(p, 4.0, Regime::lossless)).epsilon(1e-7));

    // numeric Wootters at tiny detuning follows e^{-2 (g1+g2)^2 t^2}
    SystemParams tiny{0.1, 0.1, 1e-4, 0.0, 0.0};
    for (double t : {1.0, 5.0, 10.0}) {
        const double numeric = concurrence(reduced_qubit_state(tiny, t));
        REQUIRE(numeric == Approx(std::exp(-2 * tiny.g() * tiny.g() * t * t)).margin(1e-6));
    }
}

TEST_CASE("dissipative three-tangle") {
    SystemParams p{0.1, 0.1, 0.3, 0.1, 0.0};
    REQUIRE(three_tangle_kappa(p, 0.0) == Approx(0.0).margin(1e-12));
    REQUIRE(three_tangle_kappa(p, 1000.0) == Approx(0.0).margin(1e-12));

    SystemParams lossless = lossless_params(0.3);
    for (double t : {1.0, 5.0, 9.0}) {
        const double c2 = std::norm(chi(lossless, t));
        REQUIRE(three_tangle_kappa(lossless, t) ==
                Approx(std::sqrt(1.0 - c2)).margin(1e-12));
    }
}

TEST_CASE("numeric negativities track the closed forms over a lossless period") {
    SystemParams p = lossless_params(0.2);
    const DimTag tag{2, 2, 2};
    for (int i = 0; i < 200; ++i) {
        const double t = 2 * pi / p.delta * i / 199.0;
        const ComplexMatrix rho = assemble_rho8(p, t).rho;
        REQUIRE(negativity(rho, tag, {kCavity}) ==
                Approx(closed_form_neg_qq_c(p, t, Regime::lossless)).margin(1e-9));
        REQUIRE(negativity(rho, tag, {kQubit1}) == Approx(0.5).margin(1e-9));
        REQUIRE(negativity(rho, tag, {kQubit2}) == Approx(0.5).margin(1e-9));
    }
}

TEST_CASE("numeric measures track the closed forms under dissipation") {
    SystemParams p{0.1, 0.1, 0.3, 0.1, 0.0};
    const DimTag tag{2, 2, 2};
    for (int i = 0; i <= 60; ++i) {
        const double t = 40.0 * i / 60.0;
        const ComplexMatrix rho = assemble_rho8(p, t).rho;
        REQUIRE(negativity(rho, tag, {kCavity}) ==
                Approx(closed_form_neg_qq_c(p, t, Regime::dissipative)).margin(1e-9));
        REQUIRE(negativity(rho, tag, {kQubit1}) ==
                Approx(closed_form_neg_qic_qj(p, t, Regime::dissipative)).margin(1e-9));
        const double cf_conc = std::exp(h1_corrected(p, t)) * std::abs(chi(p, t));
        REQUIRE(concurrence(partial_trace(rho, tag, kCavity)) ==
                Approx(cf_conc).margin(1e-9));
    }
}

TEST_CASE("property grid: invariances and ranges") {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const DimTag tag{2, 2, 2};
    for (int trial = 0; trial < 60; ++trial) {
        SystemParams p;
        p.g1 = 0.3 * u(rng);
        p.g2 = 0.3 * u(rng);
        p.delta = u(rng);
        p.kappa = (trial % 2 == 0) ? 0.0 : 0.001 + 0.5 * u(rng);
        p.alpha0 = Complex(4 * u(rng) - 2, 4 * u(rng) - 2);
        const double t = 30.0 * u(rng);

        const ComplexMatrix rho = assemble_rho8(p, t).rho;
        REQUIRE(hermiticity_defect(rho) == 0.0);
        REQUIRE(std::abs(rho.trace() - 1.0) < 1e-12);
        REQUIRE(hermitian_eigenvalues(rho).front() >= -1e-10);

        // h2 shift leaves every measure unchanged
        const ComplexMatrix shifted = assemble_rho8(p, t, H1Variant::corrected, 1.234).rho;
        for (int s : {0, 1, 2})
            REQUIRE(negativity(rho, tag, {s}) ==
                    Approx(negativity(shifted, tag, {s})).margin(1e-12));
        REQUIRE(concurrence(partial_trace(rho, tag, kCavity)) ==
                Approx(concurrence(partial_trace(shifted, tag, kCavity))).margin(1e-12));

        // swapping g1 and g2 changes nothing
        SystemParams sw = p;
        std::swap(sw.g1, sw.g2);
        const ComplexMatrix rho_sw = assemble_rho8(sw, t).rho;
        for (int s : {0, 1, 2})
            REQUIRE(negativity(rho, tag, {s}) ==
                    Approx(negativity(rho_sw, tag, {s})).margin(1e-12));

        // ranges
        for (int s : {0, 1, 2}) {
            const double neg = negativity(rho, tag, {s});
            REQUIRE(neg >= -1e-10);
            REQUIRE(neg <= 0.5 + 1e-10);
        }
        const double c = concurrence(partial_trace(rho, tag, kCavity));
        REQUIRE(c >= -1e-10);
        REQUIRE(c <= 1.0 + 1e-10);
        const double te = total_entanglement(rho);
        REQUIRE(te >= -1e-10);
        REQUIRE(te <= 1.5 + 1e-10);

        if (p.kappa == 0.0) {
            REQUIRE(monogamy_residual(rho) >= -1e-9);
            // C_{C|Q1Q2} is twice Neg(Q1Q2|C) for this family
            REQUIRE(tangle_A_BC_pure(rho, tag, kCavity) ==
                    Approx(2.0 * negativity(rho, tag, {kCavity})).margin(1e-9));
        }
    }
}

TEST_CASE("lossless measures ignore the initial cavity amplitude") {
    const Complex amps[] = {Complex(0, 0), Complex(1, 0), Complex(2, 3)};
    const DimTag tag{2, 2, 2};
    for (double t : {0.8, 3.0, 11.0}) {
        std::vector<double> negs, concs;
        for (Complex a : amps) {
            SystemParams p = lossless_params(0.3);
            p.alpha0 = a;
            const ComplexMatrix rho = assemble_rho8(p, t).rho;
            negs.push_back(negativity(rho, tag, {kCavity}));
            concs.push_back(concurrence(partial_trace(rho, tag, kCavity)));
        }
        for (size_t i = 1; i < negs.size(); ++i) {
            REQUIRE(negs[i] == Approx(negs[0]).margin(1e-10));
            REQUIRE(concs[i] == Approx(concs[0]).margin(1e-10));
        }
    }
}

TEST_CASE("report wiring: sums, closed forms, NaN policy") {
    SystemParams p = lossless_params(0.2);
    const EntanglementReport r0 = evaluate_report(p, 0.0);
    REQUIRE(r0.neg_qq_c == Approx(0.0).margin(1e-10));
    REQUIRE(r0.concurrence_qq == Approx(1.0).margin(1e-10));
    REQUIRE(r0.total_entanglement ==
            Approx(r0.neg_qq_c + r0.neg_q1c_q2 + r0.neg_q2c_q1).margin(1e-15));
    REQUIRE(r0.cf_total_entanglement ==
            Approx(r0.cf_neg_qq_c + 2 * r0.cf_neg_q1c_q2).margin(1e-15));
    REQUIRE_FALSE(std::isnan(r0.three_tangle));

    SystemParams diss{0.1, 0.1, 0.3, 0.1, 0.0};
    const EntanglementReport rd = evaluate_report(diss, 5.0);
    REQUIRE(std::isnan(rd.tangle_c_q1q2));
    REQUIRE(std::isnan(rd.monogamy_residual));
    REQUIRE(std::isnan(rd.cf_three_tangle));
    REQUIRE_FALSE(std::isnan(rd.cf_three_tangle_kappa));
    REQUIRE(rd.neg_qq_c == Approx(rd.cf_neg_qq_c).margin(1e-9));

    // verbatim mode evaluates the quoted |chi|^2 instead of the overlap
    const EntanglementReport rv = evaluate_report(diss, 5.0, {H1Variant::corrected, true});
    REQUIRE(rv.cf_concurrence_qq != Approx(rd.cf_concurrence_qq).margin(1e-6));
}
