#pragma once

#include "fncoh/form.hpp"
#include "fncoh/rng.hpp"
#include "fncoh/structures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fncoh {

/// Integer Fourier frequency on the n-torus.
using Freq = std::vector<long>;

inline std::string freqStr(const Freq& k) {
    std::string s = "(";
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(k[j]);
    }
    return s + ")";
}

inline bool freqIsZero(const Freq& k) {
    for (long c : k)
        if (c != 0) return false;
    return true;
}

inline Vec freqVec(const Freq& k) {
    Vec v(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) v[j] = Scalar(k[j]);
    return v;
}

inline Scalar freqNormSq(const Freq& k) {
    long s = 0;
    for (long c : k) s += c * c;
    return Scalar(s);
}

/// Trigonometric-polynomial form on the flat torus: a finite sum of modes
/// e^{i<k,x>} alpha_k with constant coefficient forms alpha_k.
class TrigForm {
public:
    TrigForm() : dim_(0), degree_(0) {}
    TrigForm(int dim, int degree) : dim_(dim), degree_(degree) {}

    static TrigForm mode(const Freq& k, const Form& a) {
        TrigForm t(a.dim(), a.degree());
        t.add(k, a);
        return t;
    }
    static TrigForm constant(const Form& a) { return mode(Freq(a.dim(), 0), a); }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool isZero() const { return modes_.empty(); }
    const std::map<Freq, Form>& modes() const { return modes_; }

    Form coefficient(const Freq& k) const {
        auto it = modes_.find(k);
        return it == modes_.end() ? Form(dim_, degree_) : it->second;
    }

    void add(const Freq& k, const Form& a) {
        if (a.isZero()) return;
        auto [it, inserted] = modes_.try_emplace(k, a);
        if (!inserted) {
            it->second += a;
            if (it->second.isZero()) modes_.erase(it);
        }
    }

    TrigForm& operator+=(const TrigForm& o) {
        for (const auto& [k, a] : o.modes_) add(k, a);
        return *this;
    }
    TrigForm& operator-=(const TrigForm& o) {
        for (const auto& [k, a] : o.modes_) add(k, -a);
        return *this;
    }
    TrigForm& operator*=(const Scalar& s) {
        if (s.isZero()) { modes_.clear(); return *this; }
        for (auto& [k, a] : modes_) a *= s;
        return *this;
    }
    friend TrigForm operator+(TrigForm a, const TrigForm& b) { return a += b; }
    friend TrigForm operator-(TrigForm a, const TrigForm& b) { return a -= b; }
    friend TrigForm operator*(const Scalar& s, TrigForm a) { return a *= s; }
    TrigForm operator-() const {
        TrigForm r(dim_, degree_);
        for (const auto& [k, a] : modes_) r.modes_.emplace(k, -a);
        return r;
    }
    /// Zero trig forms compare equal across declared degrees, matching the
    /// Form convention.
    friend bool operator==(const TrigForm& a, const TrigForm& b) {
        return a.dim_ == b.dim_ && a.modes_ == b.modes_;
    }
    friend bool operator!=(const TrigForm& a, const TrigForm& b) { return !(a == b); }

    /// Complex conjugate: mode k goes to mode -k with conjugated coefficients.
    TrigForm conj() const {
        TrigForm r(dim_, degree_);
        for (const auto& [k, a] : modes_) {
            Freq neg(k.size());
            for (std::size_t j = 0; j < k.size(); ++j) neg[j] = -k[j];
            r.add(neg, a.conj());
        }
        return r;
    }

private:
    int dim_;
    int degree_;
    std::map<Freq, Form> modes_;
};

inline TrigForm wedge(const TrigForm& a, const TrigForm& b) {
    TrigForm r(a.dim(), std::min(a.degree() + b.degree(), a.dim()));
    for (const auto& [ka, fa] : a.modes())
        for (const auto& [kb, fb] : b.modes()) {
            Freq k(ka.size());
            for (std::size_t j = 0; j < ka.size(); ++j) k[j] = ka[j] + kb[j];
            r.add(k, wedge(fa, fb));
        }
    return r;
}

inline TrigForm hodgeStar(const TrigForm& a) {
    TrigForm r(a.dim(), a.dim() - a.degree());
    for (const auto& [k, f] : a.modes()) r.add(k, hodgeStar(f));
    return r;
}

/// Coordinate derivative: e^{i<k,x>} picks up a factor i*k_axis.
inline TrigForm partialAxis(int axis, const TrigForm& a) {
    TrigForm r(a.dim(), a.degree());
    for (const auto& [k, f] : a.modes())
        r.add(k, (Scalar::i() * Scalar(k[static_cast<std::size_t>(axis)])) * f);
    return r;
}

/// d(e^{i<k,x>} alpha) = i k^flat ^ alpha per mode.
inline TrigForm exteriorDerivative(const TrigForm& a) {
    TrigForm r(a.dim(), std::min(a.degree() + 1, a.dim()));
    for (const auto& [k, f] : a.modes())
        r.add(k, Scalar::i() * wedge(flat(freqVec(k)), f));
    return r;
}

/// d*(e^{i<k,x>} alpha) = -i iota_{k#} alpha per mode.
inline TrigForm coderivative(const TrigForm& a) {
    TrigForm r(a.dim(), a.degree() == 0 ? 0 : a.degree() - 1);
    for (const auto& [k, f] : a.modes())
        r.add(k, (-Scalar::i()) * interior(freqVec(k), f));
    return r;
}

inline TrigForm laplacian(const TrigForm& a) {
    TrigForm r(a.dim(), a.degree());
    for (const auto& [k, f] : a.modes()) r.add(k, freqNormSq(k) * f);
    return r;
}

/// L^2 inner product over the unit-volume torus: modes are orthogonal, so
/// only matching frequencies pair up. Conjugate-linear in the first slot.
inline Scalar l2Inner(const TrigForm& a, const TrigForm& b) {
    Scalar s(0);
    for (const auto& [k, f] : a.modes()) {
        Form g = b.coefficient(k);
        if (!g.isZero()) s += inner(f, g);
    }
    return s;
}

class TrigVectorForm {
public:
    TrigVectorForm() : dim_(0), degree_(0) {}
    TrigVectorForm(int dim, int degree) : dim_(dim), degree_(degree) {
        components_.assign(static_cast<std::size_t>(dim), TrigForm(dim, degree));
    }

    static TrigVectorForm constant(const VectorForm& K) {
        TrigVectorForm t(K.dim(), K.degree());
        for (int j = 0; j < K.dim(); ++j)
            t.component(j) = TrigForm::constant(K.component(j));
        return t;
    }

    static TrigVectorForm mode(const Freq& k, const VectorForm& K) {
        TrigVectorForm t(K.dim(), K.degree());
        for (int j = 0; j < K.dim(); ++j)
            t.component(j) = TrigForm::mode(k, K.component(j));
        return t;
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const TrigForm& component(int j) const { return components_[static_cast<std::size_t>(j)]; }
    TrigForm& component(int j) { return components_[static_cast<std::size_t>(j)]; }

    bool isZero() const {
        for (const auto& c : components_)
            if (!c.isZero()) return false;
        return true;
    }

    TrigVectorForm& operator+=(const TrigVectorForm& o) {
        for (int j = 0; j < dim_; ++j) component(j) += o.component(j);
        return *this;
    }
    TrigVectorForm& operator-=(const TrigVectorForm& o) {
        for (int j = 0; j < dim_; ++j) component(j) -= o.component(j);
        return *this;
    }
    TrigVectorForm& operator*=(const Scalar& s) {
        for (auto& c : components_) c *= s;
        return *this;
    }
    friend TrigVectorForm operator+(TrigVectorForm a, const TrigVectorForm& b) { return a += b; }
    friend TrigVectorForm operator-(TrigVectorForm a, const TrigVectorForm& b) { return a -= b; }
    friend TrigVectorForm operator*(const Scalar& s, TrigVectorForm a) { return a *= s; }
    friend bool operator==(const TrigVectorForm& a, const TrigVectorForm& b) {
        return a.dim_ == b.dim_ && a.components_ == b.components_;
    }

private:
    int dim_;
    int degree_;
    std::vector<TrigForm> components_;
};

inline TrigForm insert(const TrigVectorForm& K, const TrigForm& a) {
    int deg = K.degree() + a.degree() - 1;
    TrigForm r(a.dim(), std::max(deg, 0));
    if (deg < 0 || deg > a.dim()) return r;
    for (int j = 0; j < a.dim(); ++j) {
        TrigForm ia(a.dim(), a.degree() == 0 ? 0 : a.degree() - 1);
        for (const auto& [k, f] : a.modes()) ia.add(k, interiorAxis(j, f));
        r += wedge(K.component(j), ia);
    }
    return r;
}

/// Nijenhuis-Lie derivative [iota_K, d] = iota_K d + (-1)^deg(K) d iota_K.
inline TrigForm lieDerivative(const TrigVectorForm& K, const TrigForm& a) {
    TrigForm r = insert(K, exteriorDerivative(a));
    Scalar sign((K.degree() % 2 == 0) ? 1 : -1);
    return r + sign * exteriorDerivative(insert(K, a));
}

/// Same derivative through the frame formula: sum_a kappa_a ^ (d/dx_a alpha)
/// + (-1)^deg(K) d kappa_a ^ iota_{e_a} alpha. The torus frame is flat, so
/// the two agree identically; both are kept as mutual cross-checks.
inline TrigForm lieDerivativeFrame(const TrigVectorForm& K, const TrigForm& a) {
    int deg = K.degree() + a.degree();
    TrigForm r(a.dim(), std::min(deg, a.dim()));
    Scalar sign((K.degree() % 2 == 0) ? 1 : -1);
    for (int j = 0; j < a.dim(); ++j) {
        r += wedge(K.component(j), partialAxis(j, a));
        TrigForm ia(a.dim(), a.degree() == 0 ? 0 : a.degree() - 1);
        for (const auto& [k, f] : a.modes()) ia.add(k, interiorAxis(j, f));
        r += sign * wedge(exteriorDerivative(K.component(j)), ia);
    }
    return r;
}

inline TrigVectorForm fnBracket(const TrigVectorForm& K, const TrigVectorForm& L) {
    const int n = K.dim();
    const int kdeg = K.degree();
    TrigVectorForm r(n, kdeg + L.degree());
    Scalar sign((kdeg % 2 == 0) ? 1 : -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // frame fields commute, so the [X1, X2] term of the product
            // formula drops and the Lie derivatives reduce to coordinate
            // derivatives of the coefficient forms
            r.component(b) += wedge(K.component(a), partialAxis(a, L.component(b)));
            r.component(a) -= wedge(partialAxis(b, K.component(a)), L.component(b));

            TrigForm iaL(n, L.degree() == 0 ? 0 : L.degree() - 1);
            for (const auto& [k, f] : L.component(b).modes()) iaL.add(k, interiorAxis(a, f));
            r.component(b) += sign * wedge(exteriorDerivative(K.component(a)), iaL);

            TrigForm ibK(n, kdeg == 0 ? 0 : kdeg - 1);
            for (const auto& [k, f] : K.component(a).modes()) ibK.add(k, interiorAxis(b, f));
            r.component(a) += sign * wedge(ibK, exteriorDerivative(L.component(b)));
        }
    return r;
}

/// Constant parallel form of even degree 2k together with its metric
/// contraction, the Maurer-Cartan element driving L_Psi.
struct ParallelForm {
    Form psi;
    VectorForm psiHat;

    static ParallelForm from(const Form& psi) {
        if (psi.degree() % 2 != 0)
            throw std::invalid_argument("ParallelForm: even degree required");
        return {psi, metricContraction(psi)};
    }
    static ParallelForm of(StructureKind kind) { return from(parallel4Form(kind)); }
};

/// Per-mode coefficient of L_Psi: alpha -> (iota_{k#} Psi) ^ alpha.
inline Form epsilonApply(const ParallelForm& P, const Freq& k, const Form& a) {
    return wedge(interior(freqVec(k), P.psi), a);
}
inline Form epsilonApply(StructureKind kind, const Freq& k, const Form& a) {
    return wedge(interior(freqVec(k), parallel4Form(kind)), a);
}

enum class LMethod { Derivation, DStar, Nabla };

/// L_Psi on the torus; the three formulas agree and are all exposed so the
/// equivalences can be checked exactly.
inline TrigForm lPsi(const ParallelForm& P, const TrigForm& a, LMethod method = LMethod::Nabla) {
    const int shift = P.psi.degree() - 1;
    switch (method) {
        case LMethod::Derivation:
            return lieDerivative(TrigVectorForm::constant(P.psiHat), a);
        case LMethod::DStar: {
            TrigForm psi = TrigForm::constant(P.psi);
            return wedge(coderivative(a), psi) - coderivative(wedge(a, psi));
        }
        case LMethod::Nabla: {
            TrigForm r(a.dim(), std::min(a.degree() + shift, a.dim()));
            for (const auto& [k, f] : a.modes())
                r.add(k, Scalar::i() * epsilonApply(P, k, f));
            return r;
        }
    }
    return TrigForm();
}

inline TrigForm lPsi(StructureKind kind, const TrigForm& a, LMethod method = LMethod::Nabla) {
    return lPsi(ParallelForm::of(kind), a, method);
}

/// Formal adjoint on degree-l input: (-1)^{n(n-l)+1} * L_Psi *.
inline TrigForm lPsiAdjoint(const ParallelForm& P, const TrigForm& a) {
    const int n = a.dim();
    const int l = a.degree();
    Scalar sign(((n * (n - l) + 1) % 2 == 0) ? 1 : -1);
    return sign * hodgeStar(lPsi(P, hodgeStar(a)));
}

inline TrigForm lPsiAdjoint(StructureKind kind, const TrigForm& a) {
    return lPsiAdjoint(ParallelForm::of(kind), a);
}

/// Random trig form: a handful of modes with |k|_inf <= maxAbs and small
/// Gaussian-integer coefficients. Small supports keep exact arithmetic fast
/// while still exercising every degree.
inline TrigForm randomTrigForm(Rng& rng, int dim, int degree, int maxModes = 5, long maxAbs = 2) {
    TrigForm t(dim, degree);
    int count = static_cast<int>(rng.intIn(1, maxModes));
    for (int m = 0; m < count; ++m)
        t.add(rng.freq(dim, maxAbs), rng.form(dim, degree, 3));
    return t;
}

inline TrigVectorForm randomTrigVectorForm(Rng& rng, int dim, int degree, int maxModes = 3,
                                           long maxAbs = 2) {
    TrigVectorForm t(dim, degree);
    for (int j = 0; j < dim; ++j)
        t.component(j) = randomTrigForm(rng, dim, degree, maxModes, maxAbs);
    return t;
}

}  // namespace fncoh
