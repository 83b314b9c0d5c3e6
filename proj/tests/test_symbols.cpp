#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fncoh/symbols.hpp"

using namespace fncoh;

namespace {
const Form phi = canonicalForm(StructureKind::G2, WhichForm::Phi);
const Form sphi = canonicalForm(StructureKind::G2, WhichForm::StarPhi);
const Form cay = canonicalForm(StructureKind::Spin7, WhichForm::Cayley);

Form applyBlock(const LinearBlock& b, const Form& a) {
    Vector v = b.entries * formToVec(a, basisMasks(b.dim, b.degFrom));
    return vecToForm(v, basisMasks(b.dim, b.degTo), b.dim, b.degTo);
}
}  // namespace

TEST_CASE("symbol values from the deformation complex") {
    Vec e1 = basisVec(7, 0);
    LinearBlock s6 = symbolOfL(sphi, e1, 6);
    CHECK(applyBlock(s6, phi) == Scalar(4) * hodgeStar(Form::basis(7, {1})));
    CHECK(applyBlock(s6, Form::basis(7, {1, 4, 6})) == -hodgeStar(Form::basis(7, {2})));

    LinearBlock s4 = symbolOfL(sphi, e1, 4);
    Form expect = -(Form::basis(7, {2, 3, 5, 7}) - Form::basis(7, {2, 3, 4, 6}));
    CHECK(applyBlock(s4, Form::basis(7, {2})) == expect);
}

TEST_CASE("symbol rejects the zero covector and scales linearly") {
    CHECK_THROWS_AS(symbolOfL(sphi, Vec(7, Scalar(0)), 4), std::invalid_argument);
    Rng rng(51);
    auto sweep = defaultXiSweep(7, 5, 99);
    for (const auto& xi : sweep) {
        Scalar c(rng.intIn(1, 5), rng.intIn(1, 3));
        Vec cxi = xi;
        for (auto& z : cxi) z *= c;
        for (int l : {3, 5, 7}) {
            Matrix lhs = symbolOfL(sphi, cxi, l).entries;
            Matrix rhs = c * symbolOfL(sphi, xi, l).entries;
            CHECK(matricesEqual(lhs, rhs));
        }
    }
}

TEST_CASE("multi-symplectic non-degeneracy: iota_v Psi = 0 iff v = 0") {
    for (StructureKind kind : {StructureKind::G2, StructureKind::Spin7}) {
        Form psi = parallel4Form(kind);
        int n = dimOf(kind);
        for (const auto& xi : defaultXiSweep(n, 50, 7701)) {
            LinearBlock s = symbolOfL(psi, xi, 3);
            CHECK(applyBlock(s, Form::one(n)) == interior(xi, psi));
            CHECK(!interior(xi, psi).isZero());
        }
    }
}

TEST_CASE("rank of the G2 symbol is constant across the sweep") {
    auto sweep = defaultXiSweep(7, 50, 7702);
    for (int l = 3; l <= 7; ++l) {
        int first = -1;
        for (const auto& xi : sweep) {
            int r = rankProfile(symbolOfL(sphi, xi, l)).dimImage;
            if (first < 0) first = r;
            CHECK(r == first);
        }
    }
}

TEST_CASE("ellipticity classification for the Cayley form") {
    auto sweep = defaultXiSweep(8, 50, 7703);
    for (int l = 3; l <= 5; ++l)
        CHECK(ellipticityClassify(cay, l, sweep) == Ellipticity::InjectiveAll);
    for (int l = 6; l <= 8; ++l)
        CHECK(ellipticityClassify(cay, l, sweep) == Ellipticity::SurjectiveAll);
}

TEST_CASE("ellipticity classification for star-phi") {
    auto sweep = defaultXiSweep(7, 50, 7704);
    for (int l : {3, 4})
        CHECK(ellipticityClassify(sphi, l, sweep) == Ellipticity::InjectiveAll);
    for (int l : {6, 7})
        CHECK(ellipticityClassify(sphi, l, sweep) == Ellipticity::SurjectiveAll);
    CHECK_THROWS_AS(ellipticityClassify(sphi, 4, {}), std::invalid_argument);
}

TEST_CASE("auxiliary first-order symbols are injective") {
    CHECK(rankProfile(auxSymbol(AuxSymbolKind::Sigma1G2, basisVec(7, 0))).dimKernel == 0);
    CHECK(rankProfile(auxSymbol(AuxSymbolKind::Sigma2G2, basisVec(7, 0))).dimKernel == 0);
    CHECK(rankProfile(auxSymbol(AuxSymbolKind::SigmaSpin7, basisVec(8, 0))).dimKernel == 0);
    for (const auto& xi : defaultXiSweep(7, 10, 7705)) {
        CHECK(rankProfile(auxSymbol(AuxSymbolKind::Sigma1G2, xi)).dimKernel == 0);
        CHECK(rankProfile(auxSymbol(AuxSymbolKind::Sigma2G2, xi)).dimKernel == 0);
    }
    for (const auto& xi : defaultXiSweep(8, 10, 7706))
        CHECK(rankProfile(auxSymbol(AuxSymbolKind::SigmaSpin7, xi)).dimKernel == 0);
    CHECK_THROWS_AS(auxSymbol(AuxSymbolKind::Sigma1G2, Vec(7, Scalar(0))), std::invalid_argument);
}

TEST_CASE("taylor codimension bound") {
    CHECK(taylorCodimBound(7, 14, 7, 1, 10) == binomial(17, 7) * 14 - binomial(18, 7) * 7);
    CHECK(taylorCodimBound(5, 5, 7, 1, 20) <= 0);
    // strictly increasing tail when rankF > rankE
    long long prev = taylorCodimBound(28, 48, 8, 1, 10);
    for (long long N = 11; N <= 30; ++N) {
        long long cur = taylorCodimBound(28, 48, 8, 1, N);
        CHECK(cur > prev);
        prev = cur;
    }
}
