#pragma once

#include "fncoh/check.hpp"
#include "fncoh/rng.hpp"
#include "fncoh/trig.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fncoh {

/// Single-mode vector field X = amplitude * e^{i k.x}.
struct ModeVectorField {
    Freq freq;
    Vec amplitude;

    TrigVectorForm field() const {
        int n = static_cast<int>(amplitude.size());
        VectorForm K(n, 0);
        for (int u = 0; u < n; ++u) K.component(u) = amplitude[u] * Form::one(n);
        return TrigVectorForm::mode(freq, K);
    }
};

/// Substitution e^i -> sum_j B(i,j) e^j, extended as an algebra homomorphism.
inline Form substituteForm(const Matrix& B, const Form& a) {
    int n = a.dim();
    Form r(n, a.degree());
    for (BasisMask m : basisMasks(n, a.degree())) {
        Scalar c = a.coeff(m);
        if (c.isZero()) continue;
        Form term = c * Form::one(n);
        for (int i = 0; i < n; ++i) {
            if (!(m & (BasisMask{1} << i))) continue;
            Form img(n, 1);
            for (int j = 0; j < n; ++j) img.add(BasisMask{1} << j, B(i, j));
            term = wedge(term, img);
        }
        r += term;
    }
    return r;
}

/// Group-level action on Lambda^k (x) R^n with every slot transforming
/// contravariantly: covectors by substitution with A^{-1}, the vector slot by
/// A^{-T}. Its weight on a (k, vector) tensor under lambda*Id is lambda^{-k-1}.
inline VectorForm pullbackVectorForm(const Matrix& Ainv, const VectorForm& K) {
    int n = K.dim();
    VectorForm r(n, K.degree());
    for (int b = 0; b < n; ++b) {
        Form moved = substituteForm(Ainv, K.component(b));
        for (int a = 0; a < n; ++a)
            if (!Ainv(b, a).isZero()) r.component(a) += Ainv(b, a) * moved;
    }
    return r;
}

/// lambda*Id acts on the contraction of the parallel 4-form with weight
/// lambda^{-4}, exactly.
inline CheckRecord scalingActionCheck(const Scalar& lambda, StructureKind kind) {
    if (lambda.isZero() || !lambda.isReal())
        throw std::invalid_argument("scalingActionCheck: lambda must be a nonzero rational");
    int n = dimOf(kind);
    VectorForm chi = metricContraction(parallel4Form(kind));
    Scalar inv = lambda.inverse();
    Matrix Ainv = zeroMatrix(n, n);
    for (int j = 0; j < n; ++j) Ainv(j, j) = inv;
    VectorForm acted = pullbackVectorForm(Ainv, chi);
    Scalar w = inv * inv * inv * inv;
    bool ok = acted == w * chi;
    CheckRecord r = makeCheck("stabilizers", "lemma-5.1-scaling", kindName(kind),
                              "lambda^-4", ok ? "lambda^-4" : "different weight", ok);
    r.expected += " (lambda=" + lambda.str() + ")";
    return r;
}

struct KillingModes {
    long dim = 0;
    std::vector<Vec> basis;  // amplitudes spanning {X : Lie_X(canonical form) = 0}
};

/// Solution space of Lie_X T = 0 among single-mode fields, T the canonical
/// 3-form (G2) or Cayley form (Spin7).
inline KillingModes killingModes(StructureKind kind, const Freq& freq) {
    int n = dimOf(kind);
    Form T = (kind == StructureKind::G2) ? canonicalForm(kind, WhichForm::Phi)
                                         : parallel4Form(kind);
    TrigForm tc = TrigForm::constant(T);
    auto masks = basisMasks(n, T.degree());
    Matrix M = zeroMatrix(static_cast<Eigen::Index>(masks.size()), n);
    for (int u = 0; u < n; ++u) {
        ModeVectorField X{freq, basisVec(n, u)};
        M.col(u) = formToVec(lieDerivative(X.field(), tc).coefficient(freq), masks);
    }
    Matrix K = kernelBasis(M);
    KillingModes result;
    result.dim = static_cast<long>(K.cols());
    for (Eigen::Index j = 0; j < K.cols(); ++j) {
        Vec a(n);
        for (int u = 0; u < n; ++u) a[u] = K(u, j);
        result.basis.push_back(a);
    }
    return result;
}

/// Aggregates killingModes over a sweep (which should contain 0) and
/// cross-checks the equivalence Lie_X(form) = 0 <=> [X, chi]^FN = 0 in both
/// directions, chi the contraction of the parallel 4-form.
inline std::vector<CheckRecord> h0TangentCohomology(StructureKind kind,
                                                    const std::vector<Freq>& sweep,
                                                    std::uint64_t seed = 20260824) {
    int n = dimOf(kind);
    std::vector<CheckRecord> out;
    TrigVectorForm chiHat =
        TrigVectorForm::constant(metricContraction(parallel4Form(kind)));
    Form T = (kind == StructureKind::G2) ? canonicalForm(kind, WhichForm::Phi)
                                         : parallel4Form(kind);
    TrigForm tc = TrigForm::constant(T);

    long total = 0;
    bool equivalence = true;
    Rng rng(seed);
    for (const auto& k : sweep) {
        KillingModes km = killingModes(kind, k);
        total += km.dim;

        long expected = freqIsZero(k) ? n : 0;
        CheckRecord r = makeCheck("stabilizers", "prop-5.2-killing-dim", kindName(kind),
                                  std::to_string(expected), std::to_string(km.dim),
                                  km.dim == expected);
        r.freq = freqStr(k);
        out.push_back(r);

        for (const auto& a : km.basis) {
            TrigVectorForm X = ModeVectorField{k, a}.field();
            equivalence = equivalence && fnBracket(X, chiHat).isZero();
        }
        // A sampled non-solution must have a nonzero bracket.
        ModeVectorField probe{k, rng.vec(n)};
        TrigVectorForm X = probe.field();
        bool lieZero = lieDerivative(X, tc).modes().empty();
        bool bracketZero = fnBracket(X, chiHat).isZero();
        equivalence = equivalence && (lieZero == bracketZero);
    }
    out.push_back(makeCheck("stabilizers", "lemma-5.1-equivalence", kindName(kind),
                            "Lie_X form = 0 <=> [X, chi]^FN = 0",
                            equivalence ? "equivalent" : "counterexample", equivalence));
    out.push_back(makeCheck("stabilizers", "prop-5.2-h0-total", kindName(kind),
                            std::to_string(n), std::to_string(total), total == n));
    return out;
}

}  // namespace fncoh
