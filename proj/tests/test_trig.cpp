#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fncoh/symbols.hpp"
#include "fncoh/trig.hpp"

using namespace fncoh;

namespace {
const Scalar I = Scalar::i();

Freq e1freq() {
    Freq k(7, 0);
    k[0] = 1;
    return k;
}
}  // namespace

TEST_CASE("exterior derivative per mode") {
    TrigForm f = TrigForm::mode(e1freq(), Form::one(7));
    CHECK(exteriorDerivative(f) == TrigForm::mode(e1freq(), I * Form::basis(7, {1})));
    CHECK(exteriorDerivative(TrigForm::constant(Form::basis(7, {2}))).isZero());
    TrigForm g = TrigForm::mode(e1freq(), Form::basis(7, {2}));
    CHECK(exteriorDerivative(g) == TrigForm::mode(e1freq(), I * Form::basis(7, {1, 2})));
}

TEST_CASE("coderivative and laplacian per mode") {
    TrigForm f = TrigForm::mode(e1freq(), Form::basis(7, {1}));
    CHECK(coderivative(f) == TrigForm::mode(e1freq(), -I * Form::one(7)));
    CHECK(coderivative(TrigForm::constant(Form::basis(7, {1, 2}))).isZero());

    Freq k(7, 0);
    k[0] = 1;
    k[1] = 2;
    Form w = Form::basis(7, {3, 4});
    CHECK(laplacian(TrigForm::mode(k, w)) == TrigForm::mode(k, Scalar(5) * w));
}

TEST_CASE("d and d* identities on random forms") {
    Rng rng(31);
    for (int rep = 0; rep < 60; ++rep) {
        int n = (rep % 2 == 0) ? 7 : 8;
        int l = static_cast<int>(rng.intIn(0, n));
        TrigForm a = randomTrigForm(rng, n, l);
        CHECK(exteriorDerivative(exteriorDerivative(a)).isZero());
        CHECK(coderivative(coderivative(a)).isZero());
        // d* = (-1)^{n(l+1)+1} * d * on l-forms
        Scalar sign(((n * (l + 1) + 1) % 2 == 0) ? 1 : -1);
        CHECK(coderivative(a) == sign * hodgeStar(exteriorDerivative(hodgeStar(a))));
        // Laplacian = d d* + d* d
        TrigForm lap = exteriorDerivative(coderivative(a)) + coderivative(exteriorDerivative(a));
        CHECK(lap == laplacian(a));
    }
}

TEST_CASE("the three forms of L_Psi agree") {
    Rng rng(32);
    for (StructureKind kind : {StructureKind::G2, StructureKind::Spin7}) {
        ParallelForm P = ParallelForm::of(kind);
        int n = dimOf(kind);
        for (int rep = 0; rep < 50; ++rep) {
            int l = static_cast<int>(rng.intIn(0, n));
            TrigForm a = randomTrigForm(rng, n, l);
            TrigForm viaDerivation = lPsi(P, a, LMethod::Derivation);
            TrigForm viaDStar = lPsi(P, a, LMethod::DStar);
            TrigForm viaNabla = lPsi(P, a, LMethod::Nabla);
            CHECK(viaDerivation == viaDStar);
            CHECK(viaDerivation == viaNabla);
        }
        CHECK(lPsi(P, TrigForm::constant(parallel4Form(kind))).isZero());
    }
}

TEST_CASE("L_Psi on a single scalar mode") {
    TrigForm a = TrigForm::mode(e1freq(), Form::one(7));
    Form expect = interiorAxis(0, canonicalForm(StructureKind::G2, WhichForm::StarPhi));
    CHECK(lPsi(StructureKind::G2, a) == TrigForm::mode(e1freq(), I * expect));
    CHECK(lPsi(StructureKind::G2, TrigForm::constant(Form::basis(7, {1, 2}))).isZero());
}

TEST_CASE("L_Psi squares to zero and commutes with d, d*, Laplacian") {
    Rng rng(33);
    for (StructureKind kind : {StructureKind::G2, StructureKind::Spin7}) {
        ParallelForm P = ParallelForm::of(kind);
        int n = dimOf(kind);
        for (int rep = 0; rep < 50; ++rep) {
            int l = static_cast<int>(rng.intIn(0, n));
            TrigForm a = randomTrigForm(rng, n, l);
            CHECK(lPsi(P, lPsi(P, a)).isZero());
            CHECK(lPsi(P, exteriorDerivative(a)) == -exteriorDerivative(lPsi(P, a)));
            CHECK(lPsi(P, coderivative(a)) == -coderivative(lPsi(P, a)));
            CHECK(lPsi(P, laplacian(a)) == laplacian(lPsi(P, a)));
            // multiplication by the parallel form commutes with the Laplacian
            TrigForm psi = TrigForm::constant(P.psi);
            CHECK(laplacian(wedge(a, psi)) == wedge(laplacian(a), psi));
            TrigForm spsi = TrigForm::constant(hodgeStar(P.psi));
            CHECK(laplacian(wedge(a, spsi)) == wedge(laplacian(a), spsi));
        }
    }
}

TEST_CASE("L_Psi is a degree-3 derivation of the wedge algebra") {
    Rng rng(34);
    for (StructureKind kind : {StructureKind::G2, StructureKind::Spin7}) {
        ParallelForm P = ParallelForm::of(kind);
        int n = dimOf(kind);
        for (int rep = 0; rep < 40; ++rep) {
            int p = static_cast<int>(rng.intIn(0, 3));
            int q = static_cast<int>(rng.intIn(0, 3));
            TrigForm a = randomTrigForm(rng, n, p, 3), b = randomTrigForm(rng, n, q, 3);
            Scalar sign((p % 2 == 0) ? 1 : -1);
            CHECK(lPsi(P, wedge(a, b)) ==
                  wedge(lPsi(P, a), b) + sign * wedge(a, lPsi(P, b)));
        }
    }
}

TEST_CASE("kernel of L_Psi is a subalgebra, image an ideal in it") {
    Rng rng(35);
    StructureKind kind = StructureKind::G2;
    ParallelForm P = ParallelForm::of(kind);
    Form psi = parallel4Form(kind);
    int found = 0;
    for (int rep = 0; rep < 40; ++rep) {
        // construct exact per-mode kernel elements
        Freq ka = rng.freqNonzero(7, 2), kb = rng.freqNonzero(7, 2);
        int la = static_cast<int>(rng.intIn(1, 3)), lb = static_cast<int>(rng.intIn(1, 3));
        Matrix Ka = kernelBasis(symbolOfL(psi, freqVec(ka), la + 3).entries);
        Matrix Kb = kernelBasis(symbolOfL(psi, freqVec(kb), lb + 3).entries);
        if (Ka.cols() == 0 || Kb.cols() == 0) continue;
        ++found;
        Vector va = Ka.col(rng.intIn(0, Ka.cols() - 1));
        Vector vb = Kb.col(rng.intIn(0, Kb.cols() - 1));
        TrigForm a = TrigForm::mode(ka, vecToForm(va, basisMasks(7, la), 7, la));
        TrigForm b = TrigForm::mode(kb, vecToForm(vb, basisMasks(7, lb), 7, lb));
        REQUIRE(lPsi(P, a).isZero());
        REQUIRE(lPsi(P, b).isZero());
        CHECK(lPsi(P, wedge(a, b)).isZero());
        // image wedge kernel stays in the image, via the derivation law
        TrigForm c = randomTrigForm(rng, 7, static_cast<int>(rng.intIn(0, 2)), 2);
        CHECK(wedge(lPsi(P, c), a) == lPsi(P, wedge(c, a)));
    }
    CHECK(found >= 10);
}

TEST_CASE("formal adjoint pairs exactly under the L2 inner product") {
    Rng rng(36);
    for (StructureKind kind : {StructureKind::G2, StructureKind::Spin7}) {
        ParallelForm P = ParallelForm::of(kind);
        int n = dimOf(kind);
        CHECK(lPsiAdjoint(P, TrigForm::constant(parallel4Form(kind))).isZero());
        for (int rep = 0; rep < 100; ++rep) {
            int l = static_cast<int>(rng.intIn(3, n));
            TrigForm beta = randomTrigForm(rng, n, l - 3);
            TrigForm alpha = randomTrigForm(rng, n, l);
            CHECK(l2Inner(lPsi(P, beta), alpha) == l2Inner(beta, lPsiAdjoint(P, alpha)));
        }
    }
}

TEST_CASE("l2 inner product basics") {
    TrigForm f = TrigForm::mode(e1freq(), Form::basis(7, {1, 2}));
    CHECK(l2Inner(f, f) == Scalar(1));
    Freq k2(7, 0);
    k2[1] = 1;
    TrigForm g = TrigForm::mode(k2, Form::basis(7, {1, 2}));
    CHECK(l2Inner(f, g) == Scalar(0));
    TrigForm phi = TrigForm::constant(canonicalForm(StructureKind::G2, WhichForm::Phi));
    CHECK(l2Inner(phi, phi) == Scalar(7));
}

TEST_CASE("FN bracket basics") {
    Rng rng(37);
    // constants bracket to zero
    TrigVectorForm K = TrigVectorForm::constant(metricContraction(parallel4Form(StructureKind::G2)));
    CHECK(fnBracket(K, K).isZero());
    TrigVectorForm L = TrigVectorForm::constant(metricContraction(parallel4Form(StructureKind::Spin7)));
    CHECK(fnBracket(L, L).isZero());

    // graded anticommutativity
    for (int rep = 0; rep < 20; ++rep) {
        int p = static_cast<int>(rng.intIn(0, 2));
        int q = static_cast<int>(rng.intIn(0, 2));
        TrigVectorForm A = randomTrigVectorForm(rng, 7, p, 2);
        TrigVectorForm B = randomTrigVectorForm(rng, 7, q, 2);
        Scalar sign(((p * q) % 2 == 0) ? -1 : 1);
        CHECK(fnBracket(A, B) == sign * fnBracket(B, A));
    }
}

TEST_CASE("FN bracket with a vector field is the tensor Lie derivative") {
    Rng rng(38);
    for (int rep = 0; rep < 15; ++rep) {
        TrigVectorForm X = randomTrigVectorForm(rng, 7, 0, 2);
        int q = static_cast<int>(rng.intIn(1, 2));
        TrigVectorForm K = randomTrigVectorForm(rng, 7, q, 2);
        TrigVectorForm lie(7, q);
        for (int b = 0; b < 7; ++b) {
            lie.component(b) = lieDerivative(X, K.component(b));
            for (int a = 0; a < 7; ++a)
                lie.component(b) -= wedge(partialAxis(a, X.component(b)), K.component(a));
        }
        CHECK(fnBracket(X, K) == lie);
    }
}

TEST_CASE("Nijenhuis-Lie derivative: both formulas, d-commutation, homomorphism") {
    Rng rng(39);
    for (int rep = 0; rep < 25; ++rep) {
        int n = (rep % 2 == 0) ? 7 : 8;
        int p = static_cast<int>(rng.intIn(0, 2));
        int l = static_cast<int>(rng.intIn(0, 3));
        TrigVectorForm K = randomTrigVectorForm(rng, n, p, 2);
        TrigForm a = randomTrigForm(rng, n, l, 3);
        CHECK(lieDerivative(K, a) == lieDerivativeFrame(K, a));
        Scalar sign((p % 2 == 0) ? 1 : -1);
        CHECK(lieDerivative(K, exteriorDerivative(a)) ==
              sign * exteriorDerivative(lieDerivative(K, a)));

        int q = static_cast<int>(rng.intIn(0, 2));
        TrigVectorForm L2 = randomTrigVectorForm(rng, n, q, 2);
        TrigForm lhs = lieDerivative(fnBracket(K, L2), a);
        Scalar csign(((p * q) % 2 == 0) ? 1 : -1);
        TrigForm rhs = lieDerivative(K, lieDerivative(L2, a))
                     - csign * lieDerivative(L2, lieDerivative(K, a));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("every torus operator is mode-preserving") {
    Rng rng(40);
    for (int rep = 0; rep < 20; ++rep) {
        TrigForm a = randomTrigForm(rng, 7, static_cast<int>(rng.intIn(0, 4)));
        for (const TrigForm& out : {exteriorDerivative(a), coderivative(a), laplacian(a),
                                    lPsi(StructureKind::G2, a), lPsiAdjoint(StructureKind::G2, a)})
            for (const auto& [k, f] : out.modes())
                CHECK(a.modes().count(k) == 1);
    }
}
