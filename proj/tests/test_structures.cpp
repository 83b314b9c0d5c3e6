#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fncoh/rng.hpp"
#include "fncoh/structures.hpp"

using namespace fncoh;

namespace {
const Form phi = canonicalForm(StructureKind::G2, WhichForm::Phi);
const Form sphi = canonicalForm(StructureKind::G2, WhichForm::StarPhi);
const Form cay = canonicalForm(StructureKind::Spin7, WhichForm::Cayley);

Matrix diagMatrix(const std::vector<long>& d) {
    Matrix A = zeroMatrix(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = Scalar(d[i]);
    return A;
}

/// Pullback of a form by a diagonal matrix: each e^S coefficient picks up the
/// product of the diagonal entries over S.
Form pullbackDiag(const std::vector<long>& d, const Form& a) {
    Form r(a.dim(), a.degree());
    for (const auto& [m, c] : a.terms()) {
        Scalar f(1);
        for (int j = 0; j < a.dim(); ++j)
            if (m & (BasisMask(1) << j)) f *= Scalar(d[static_cast<std::size_t>(j)]);
        r.add(m, f * c);
    }
    return r;
}
}  // namespace

TEST_CASE("canonical forms") {
    CHECK(phi.terms().size() == 7);
    CHECK(sphi.terms().size() == 7);
    CHECK(cay.terms().size() == 14);
    CHECK(phi.coeff(Form::basis(7, {1, 2, 3}).terms().begin()->first) == Scalar(1));
    CHECK(phi.coeff(Form::basis(7, {2, 5, 7}).terms().begin()->first) == Scalar(-1));
    for (const auto& [m, c] : cay.terms()) CHECK(c.normSq() == 1);
    CHECK(hodgeStar(phi) == sphi);
    CHECK(hodgeStar(cay) == cay);
    CHECK(inner(cay, cay) == Scalar(14));
    CHECK_THROWS(canonicalForm(StructureKind::Spin7, WhichForm::Phi));
    CHECK(parallel4Form(StructureKind::G2) == sphi);
    CHECK(parallel4Form(StructureKind::Spin7) == cay);
}

TEST_CASE("metric from the canonical 3-form is the identity") {
    MetricResult r = metricFrom3Form(phi);
    CHECK(r.exact);
    CHECK(matricesEqual(r.g, identityMatrix(7)));
}

TEST_CASE("metric homogeneity: lambda^3 phi gives lambda^2 identity") {
    Scalar l3(27);  // lambda = 3
    MetricResult r = metricFrom3Form(l3 * phi);
    CHECK(r.exact);
    CHECK(matricesEqual(r.g, Scalar(9) * identityMatrix(7)));
}

TEST_CASE("metric of a diagonal pullback") {
    std::vector<long> d{1, 2, 3, 1, 1, 2, 5};
    MetricResult r = metricFrom3Form(pullbackDiag(d, phi));
    CHECK(r.exact);
    Matrix expect = zeroMatrix(7, 7);
    for (int i = 0; i < 7; ++i) expect(i, i) = Scalar(d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(i)]);
    CHECK(matricesEqual(r.g, expect));
}

TEST_CASE("metric approximate normalization path") {
    // 2*phi: B = 8 Id, det B = 2^21, no rational ninth root
    MetricResult r = metricFrom3Form(Scalar(2) * phi);
    CHECK(!r.exact);
    CHECK(matricesEqual(r.g, Scalar(8) * identityMatrix(7)));
    // 2^(-21/9) = 0.1984251314960249...
    CHECK(r.scale.substr(0, 12) == "1.9842513149");
    CHECK(r.scale.substr(r.scale.size() - 3) == "e-1");
}

TEST_CASE("degenerate 3-form is rejected") {
    CHECK_THROWS_AS(metricFrom3Form(Form::basis(7, {1, 2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(metricFrom3Form(-phi), std::invalid_argument);
}

TEST_CASE("gl action is a derivation and so acts skew-adjointly") {
    Rng rng(21);
    for (int rep = 0; rep < 30; ++rep) {
        int n = (rep % 2 == 0) ? 7 : 8;
        Matrix X(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) X(i, j) = rng.scalarIn3(false);
        Form a = rng.form(n, 2), b = rng.form(n, static_cast<int>(rng.intIn(1, 2)));
        CHECK(glActForm(X, wedge(a, b)) ==
              wedge(glActForm(X, a), b) + wedge(a, glActForm(X, b)));
        Matrix skew = X - X.transpose();
        Form c = rng.form(n, 2);
        CHECK(inner(glActForm(skew, a), c) + inner(a, glActForm(skew, c)) == Scalar(0));
    }
}

TEST_CASE("stabilizer algebras have the expected dimensions") {
    Subalgebra g2gl = stabilizerAlgebra(phi, false);
    CHECK(g2gl.dim() == 14);
    CHECK(g2gl.closed);

    Subalgebra g2so = stabilizerAlgebra(phi, true);
    CHECK(g2so.dim() == 14);

    Subalgebra g2star = stabilizerAlgebra(sphi, false);
    CHECK(g2star.dim() == 14);

    Subalgebra spin7 = stabilizerAlgebra(cay, false);
    CHECK(spin7.dim() == 21);
    CHECK(spin7.closed);
}

TEST_CASE("stabilizers of the contracted 4-forms") {
    VectorForm chiG2 = metricContraction(sphi);
    Subalgebra a = stabilizerAlgebra(chiG2, false);
    CHECK(a.dim() == 14);
    CHECK(a.closed);

    VectorForm chiSpin7 = metricContraction(cay);
    Subalgebra b = stabilizerAlgebra(chiSpin7, false);
    CHECK(b.dim() == 21);
    CHECK(b.closed);

    // the identity matrix does not stabilize the contracted form
    VectorForm idAct = glActVectorForm(identityMatrix(7), chiG2);
    CHECK(!idAct.isZero());
    CHECK(idAct == Scalar(-2) * chiG2);
}

TEST_CASE("isotypic projectors match the type tables") {
    for (StructureKind kind : {StructureKind::G2, StructureKind::Spin7}) {
        int n = dimOf(kind);
        for (int k = 0; k <= n; ++k) {
            const auto& comps = isotypicComponents(kind, k);
            const auto& expect = expectedTypeDims(kind, k);
            REQUIRE(comps.size() == expect.size());
            Matrix sum;
            for (std::size_t c = 0; c < comps.size(); ++c) {
                CHECK(comps[c].irrepDim == expect[c]);
                const Matrix& P = comps[c].projector;
                CHECK(rank(P) == comps[c].irrepDim);
                CHECK(matricesEqual(P * P, P));
                sum = c == 0 ? P : Matrix(sum + P);
                for (std::size_t o = 0; o < c; ++o)
                    CHECK(isZeroMatrix(comps[o].projector * P));
            }
            CHECK(matricesEqual(sum, identityMatrix(sum.rows())));
        }
    }
}

TEST_CASE("projected 2-form example") {
    Form a = Form::basis(7, {1, 2});
    Form p7 = typeProject(StructureKind::G2, 2, 7, a);
    Scalar third(1, 3);
    Form expect = third * (Form::basis(7, {1, 2}) - Form::basis(7, {4, 7}) - Form::basis(7, {5, 6}));
    CHECK(p7 == expect);
    CHECK(p7 == third * interiorAxis(2, phi));
    // eigenvalue identity on the 7-part
    Form alpha = interiorAxis(2, phi);
    CHECK(hodgeStar(wedge(alpha, phi)) == Scalar(2) * alpha);
}

TEST_CASE("identity suite passes and carries stable ids") {
    auto records = identitySuite();
    CHECK(allPass(records));
    bool found = false;
    for (const auto& r : records)
        if (r.check_id == "lemma-6.1-form15") found = true;
    CHECK(found);
    CHECK(records.size() >= 30);
}
