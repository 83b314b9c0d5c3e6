#pragma once

#include "fncoh/scalar.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fncoh {

/// Basis k-covectors e^{i1} ^ ... ^ e^{ik} (i1 < ... < ik) are encoded as
/// bitmasks over the 0-based axis indices; popcount(mask) is the degree.
using BasisMask = std::uint16_t;

inline int maskDegree(BasisMask m) { return std::popcount(m); }

/// Sign of reordering the concatenation (a, b) of two disjoint increasing
/// tuples into a single increasing tuple: (-1)^{#inversions}.
inline int mergeSign(BasisMask a, BasisMask b) {
    int inversions = 0;
    while (b != 0) {
        BasisMask low = b & static_cast<BasisMask>(-b);
        // bits of `a` strictly above this bit of `b` must jump over it
        inversions += std::popcount(static_cast<BasisMask>(a & ~(low | (low - 1))));
        b = static_cast<BasisMask>(b & ~low);
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

/// Sign incurred by pulling e^axis out of the front of the basis form `m`
/// (axis must be set in m): (-1)^{#indices below axis}.
inline int extractSign(BasisMask m, int axis) {
    BasisMask below = static_cast<BasisMask>(m & ((BasisMask(1) << axis) - 1));
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

/// Alternating k-form on R^n (n = 7 or 8 in practice), stored sparsely as
/// {increasing index tuple -> coefficient}; zero coefficients are never kept.
class Form {
public:
    Form() : dim_(0), degree_(0) {}
    Form(int dim, int degree) : dim_(dim), degree_(degree) {
        assert(degree >= 0 && degree <= dim);
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<BasisMask, Scalar>& terms() const { return terms_; }

    Scalar coeff(BasisMask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add(BasisMask m, const Scalar& c) {
        assert(maskDegree(m) == degree_);
        if (c.isZero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    Form& operator+=(const Form& o) {
        assert(dim_ == o.dim_ && degree_ == o.degree_);
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Form& operator-=(const Form& o) {
        assert(dim_ == o.dim_ && degree_ == o.degree_);
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    Form& operator*=(const Scalar& s) {
        if (s.isZero()) { terms_.clear(); return *this; }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Scalar& s, Form a) { return a *= s; }
    friend Form operator*(Form a, const Scalar& s) { return a *= s; }
    Form operator-() const {
        Form r(dim_, degree_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    /// Degree tags are ignored so that zero forms of different declared
    /// degrees (which arise from degree-shifting operator chains) compare
    /// equal; nonzero terms pin the degree anyway.
    friend bool operator==(const Form& a, const Form& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    Form conj() const {
        Form r(dim_, degree_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
        return r;
    }

    /// Basis form from explicit 1-based axis labels, e.g. {1,2,3} -> e^123.
    static Form basis(int dim, std::initializer_list<int> axes1) {
        Form r(dim, static_cast<int>(axes1.size()));
        BasisMask m = 0;
        for (int a : axes1) {
            assert(a >= 1 && a <= dim);
            m = static_cast<BasisMask>(m | (BasisMask(1) << (a - 1)));
        }
        assert(maskDegree(m) == static_cast<int>(axes1.size()));
        r.add(m, Scalar(1));
        return r;
    }

    static Form one(int dim) {
        Form r(dim, 0);
        r.add(0, Scalar(1));
        return r;
    }

    std::string str() const;

private:
    int dim_;
    int degree_;
    std::map<BasisMask, Scalar> terms_;
};

/// All degree-k basis masks on n axes, in increasing numeric (= canonical
/// lexicographic-from-low-axis) order. This ordering indexes every matrix
/// built on Lambda^k.
inline std::vector<BasisMask> basisMasks(int dim, int degree) {
    std::vector<BasisMask> out;
    for (BasisMask m = 0; m < (BasisMask(1) << dim); ++m)
        if (maskDegree(m) == degree) out.push_back(m);
    return out;
}

inline Form wedge(const Form& a, const Form& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("wedge: dimension mismatch");
    int deg = a.degree() + b.degree();
    if (deg > a.dim()) return Form(a.dim(), a.dim());  // zero top-degree overflow
    Form r(a.dim(), deg);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if ((ma & mb) != 0) continue;
            Scalar c = ca * cb;
            if (mergeSign(ma, mb) < 0) c = -c;
            r.add(static_cast<BasisMask>(ma | mb), c);
        }
    return r;
}

/// Coordinate vector v = sum v_j e_j; with the basis orthonormal this also
/// represents the covector v^flat.
using Vec = std::vector<Scalar>;

inline Vec basisVec(int dim, int axis0) {
    Vec v(dim, Scalar(0));
    v[axis0] = Scalar(1);
    return v;
}

/// Interior product iota_{e_axis}.
inline Form interiorAxis(int axis0, const Form& a) {
    if (a.degree() == 0) return Form(a.dim(), 0);  // total by convention
    Form r(a.dim(), a.degree() - 1);
    BasisMask bit = static_cast<BasisMask>(BasisMask(1) << axis0);
    for (const auto& [m, c] : a.terms()) {
        if ((m & bit) == 0) continue;
        Scalar s = c;
        if (extractSign(m, axis0) < 0) s = -s;
        r.add(static_cast<BasisMask>(m & ~bit), s);
    }
    return r;
}

inline Form interior(const Vec& v, const Form& a) {
    if (static_cast<int>(v.size()) != a.dim())
        throw std::invalid_argument("interior: vector/form dimension mismatch");
    if (a.degree() == 0) return Form(a.dim(), 0);
    Form r(a.dim(), a.degree() - 1);
    for (int j = 0; j < a.dim(); ++j) {
        if (v[j].isZero()) continue;
        r += v[j] * interiorAxis(j, a);
    }
    return r;
}

/// Hodge star for the orthonormal basis with orientation e^1 ^ ... ^ e^n.
/// Defined by a ^ b = g(*a, b) vol, i.e. *e_S = sign(S, S^c) e_{S^c}.
inline Form hodgeStar(const Form& a) {
    int n = a.dim();
    Form r(n, n - a.degree());
    BasisMask full = static_cast<BasisMask>((BasisMask(1) << n) - 1);
    for (const auto& [m, c] : a.terms()) {
        BasisMask comp = static_cast<BasisMask>(full & ~m);
        Scalar s = c;
        if (mergeSign(m, comp) < 0) s = -s;
        r.add(comp, s);
    }
    return r;
}

/// Bilinear pairing: sum over shared tuples without conjugation. Satisfies
/// (*a) ^ b = pair(a, b) vol for equal-degree a, b.
inline Scalar pairBilinear(const Form& a, const Form& b) {
    if (a.dim() != b.dim() || a.degree() != b.degree())
        throw std::invalid_argument("pair: degree mismatch");
    Scalar s(0);
    for (const auto& [m, c] : a.terms()) {
        Scalar cb = b.coeff(m);
        if (!cb.isZero()) s += c * cb;
    }
    return s;
}

/// Hermitian inner product (conjugate-linear in the first slot); the
/// positive-definite extension of the orthonormal pairing.
inline Scalar inner(const Form& a, const Form& b) {
    if (a.dim() != b.dim() || a.degree() != b.degree())
        throw std::invalid_argument("inner: degree mismatch");
    Scalar s(0);
    for (const auto& [m, c] : a.terms()) {
        Scalar cb = b.coeff(m);
        if (!cb.isZero()) s += c.conj() * cb;
    }
    return s;
}

/// flat: vector -> 1-form (identity on coefficients in the orthonormal basis).
inline Form flat(const Vec& v) {
    Form r(static_cast<int>(v.size()), 1);
    for (int j = 0; j < static_cast<int>(v.size()); ++j)
        r.add(static_cast<BasisMask>(BasisMask(1) << j), v[j]);
    return r;
}

/// sharp: 1-form -> vector.
inline Vec sharp(const Form& a) {
    assert(a.degree() == 1);
    Vec v(a.dim(), Scalar(0));
    for (const auto& [m, c] : a.terms())
        v[std::countr_zero(m)] = c;
    return v;
}

/// Element of Lambda^k (R^n)^* (x) R^n; component j multiplies e_j.
class VectorForm {
public:
    VectorForm() : dim_(0), degree_(0) {}
    VectorForm(int dim, int degree) : dim_(dim), degree_(degree) {
        components_.assign(dim, Form(dim, degree));
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const Form& component(int j) const { return components_[j]; }
    Form& component(int j) { return components_[j]; }

    bool isZero() const {
        for (const auto& f : components_)
            if (!f.isZero()) return false;
        return true;
    }

    VectorForm& operator+=(const VectorForm& o) {
        assert(dim_ == o.dim_ && degree_ == o.degree_);
        for (int j = 0; j < dim_; ++j) components_[j] += o.components_[j];
        return *this;
    }
    VectorForm& operator-=(const VectorForm& o) {
        assert(dim_ == o.dim_ && degree_ == o.degree_);
        for (int j = 0; j < dim_; ++j) components_[j] -= o.components_[j];
        return *this;
    }
    VectorForm& operator*=(const Scalar& s) {
        for (auto& f : components_) f *= s;
        return *this;
    }
    friend VectorForm operator+(VectorForm a, const VectorForm& b) { return a += b; }
    friend VectorForm operator-(VectorForm a, const VectorForm& b) { return a -= b; }
    friend VectorForm operator*(const Scalar& s, VectorForm a) { return a *= s; }

    friend bool operator==(const VectorForm& a, const VectorForm& b) {
        return a.dim_ == b.dim_ && a.components_ == b.components_;
    }

private:
    int dim_;
    int degree_;
    std::vector<Form> components_;
};

/// Metric contraction d_g: component j is iota_{e_j} a (orthonormal basis).
/// A 0-form contracts to the zero VectorForm.
inline VectorForm metricContraction(const Form& a) {
    int deg = a.degree() == 0 ? 0 : a.degree() - 1;
    VectorForm r(a.dim(), deg);
    if (a.degree() == 0) return r;
    for (int j = 0; j < a.dim(); ++j) r.component(j) = interiorAxis(j, a);
    return r;
}

/// Insertion iota_K a = sum_j kappa_j ^ (iota_{e_j} a) for K = kappa_j (x) e_j.
inline Form insert(const VectorForm& K, const Form& a) {
    assert(K.dim() == a.dim());
    int deg = K.degree() + a.degree() - 1;
    if (deg < 0 || deg > a.dim()) return Form(a.dim(), std::max(deg, 0));
    Form r(a.dim(), deg);
    for (int j = 0; j < a.dim(); ++j)
        r += wedge(K.component(j), interiorAxis(j, a));
    return r;
}

/// 1-based axis labels in str(); n=8 prints 0-based to match the usual
/// Spin(7) index convention.
inline std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        if (!first) out += " + ";
        first = false;
        std::string mono = "e^";
        for (int j = 0; j < dim_; ++j)
            if (m & (BasisMask(1) << j)) mono += std::to_string(dim_ == 8 ? j : j + 1);
        if (degree_ == 0) mono = "1";
        if (cs == "1") out += mono;
        else if (cs == "-1") out += "-" + mono;
        else out += "(" + cs + ")" + mono;
    }
    return out;
}

}  // namespace fncoh
