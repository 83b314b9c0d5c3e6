#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fncoh/deform.hpp"

using namespace fncoh;

namespace {
Freq unitFreq(int n, int axis) {
    Freq k(n, 0);
    k[axis] = 1;
    return k;
}

std::vector<Freq> smallSweep(int n) {
    std::vector<Freq> sweep{Freq(n, 0)};
    for (int u = 0; u < n; ++u) {
        Freq k(n, 0);
        k[u] = 1;
        sweep.push_back(k);
        k[u] = -1;
        sweep.push_back(k);
    }
    return sweep;
}
}  // namespace

TEST_CASE("substitution homomorphism") {
    Matrix B = zeroMatrix(7, 7);
    for (int j = 0; j < 7; ++j) B(j, j) = Scalar(2);
    CHECK(substituteForm(B, Form::basis(7, {1, 2})) == Scalar(4) * Form::basis(7, {1, 2}));

    // swap of the first two axes picks up the transposition sign
    Matrix P = zeroMatrix(7, 7);
    P(0, 1) = Scalar(1);
    P(1, 0) = Scalar(1);
    for (int j = 2; j < 7; ++j) P(j, j) = Scalar(1);
    CHECK(substituteForm(P, Form::basis(7, {1, 2})) == -Form::basis(7, {1, 2}));
    CHECK(substituteForm(P, Form::basis(7, {1, 3})) == Form::basis(7, {2, 3}));
}

TEST_CASE("scaling acts with weight -4 on the contracted 4-form") {
    CHECK(scalingActionCheck(Scalar(2), StructureKind::G2).status == CheckStatus::Pass);
    CHECK(scalingActionCheck(Scalar(3), StructureKind::Spin7).status == CheckStatus::Pass);
    CHECK(scalingActionCheck(Scalar(1), StructureKind::G2).status == CheckStatus::Pass);
    CHECK(scalingActionCheck(Scalar(-2), StructureKind::Spin7).status == CheckStatus::Pass);
    CHECK(scalingActionCheck(Scalar(2, 3), StructureKind::G2).status == CheckStatus::Pass);
    CHECK_THROWS_AS(scalingActionCheck(Scalar(0), StructureKind::G2), std::invalid_argument);
    CHECK_THROWS_AS(scalingActionCheck(Scalar::i(), StructureKind::G2),
                    std::invalid_argument);

    // the weight is exactly lambda^-4, spot-checked numerically
    VectorForm chi = metricContraction(parallel4Form(StructureKind::G2));
    Matrix Ainv = zeroMatrix(7, 7);
    for (int j = 0; j < 7; ++j) Ainv(j, j) = Scalar(1, 2);
    CHECK(pullbackVectorForm(Ainv, chi) == Scalar(1, 16) * chi);
}

TEST_CASE("killing modes per frequency") {
    CHECK(killingModes(StructureKind::G2, Freq(7, 0)).dim == 7);
    CHECK(killingModes(StructureKind::Spin7, Freq(8, 0)).dim == 8);
    CHECK(killingModes(StructureKind::G2, unitFreq(7, 0)).dim == 0);
    Freq k(8, 0);
    k[0] = 1;
    k[1] = 1;
    CHECK(killingModes(StructureKind::Spin7, k).dim == 0);
    Freq k2(7, 0);
    k2[3] = 2;
    k2[6] = -1;
    CHECK(killingModes(StructureKind::G2, k2).dim == 0);
}

TEST_CASE("h0 aggregation and the bracket equivalence") {
    for (StructureKind kind : {StructureKind::G2, StructureKind::Spin7}) {
        auto records = h0TangentCohomology(kind, smallSweep(dimOf(kind)));
        for (const auto& r : records) {
            INFO(r.check_id, " ", r.freq, " expected ", r.expected, " got ", r.got);
            CHECK(r.status == CheckStatus::Pass);
        }
    }
}

TEST_CASE("bracket vanishes for constant fields and not for a shearing mode") {
    TrigVectorForm chiHat =
        TrigVectorForm::constant(metricContraction(parallel4Form(StructureKind::G2)));
    TrigVectorForm X = ModeVectorField{Freq(7, 0), basisVec(7, 0)}.field();
    CHECK(fnBracket(X, chiHat).isZero());

    ModeVectorField shear{unitFreq(7, 0), basisVec(7, 1)};
    TrigForm phiC = TrigForm::constant(canonicalForm(StructureKind::G2, WhichForm::Phi));
    CHECK(!lieDerivative(shear.field(), phiC).modes().empty());
    CHECK(!fnBracket(shear.field(), chiHat).isZero());
}
