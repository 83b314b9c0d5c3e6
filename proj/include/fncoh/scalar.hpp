#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

namespace fncoh {

/// Exact Gaussian rational a + b*i with arbitrary-precision rational parts.
/// All arithmetic is exact; mpq_class keeps fractions canonically reduced,
/// so equality is decidable by component comparison.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}          // NOLINT(google-explicit-constructor)
    Scalar(int v) : re_(v), im_(0) {}           // NOLINT(google-explicit-constructor)
    Scalar(mpq_class re) : re_(std::move(re)), im_(0) {}  // NOLINT
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
    Scalar(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool isZero() const { return re_ == 0 && im_ == 0; }
    bool isReal() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    /// |z|^2 = a^2 + b^2, a nonnegative rational.
    mpq_class normSq() const { return re_ * re_ + im_ * im_; }

    Scalar inverse() const {
        mpq_class n = normSq();
        return Scalar(re_ / n, -im_ / n);
    }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Renders "a/b", "c/d i" or "a/b+c/d i"; integers drop the denominator.
    std::string str() const {
        if (isZero()) return "0";
        std::string out;
        if (re_ != 0) out += re_.get_str();
        if (im_ != 0) {
            if (!out.empty() && im_ > 0) out += "+";
            if (im_ == 1) {
                out += "i";
            } else if (im_ == -1) {
                out += "-i";
            } else {
                out += im_.get_str() + " i";
            }
        }
        return out;
    }

private:
    mpq_class re_;
    mpq_class im_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

inline Scalar conj(const Scalar& s) { return s.conj(); }

using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

}  // namespace fncoh

namespace Eigen {

template <>
struct NumTraits<fncoh::Scalar> {
    using Real = fncoh::Scalar;
    using NonInteger = fncoh::Scalar;
    using Literal = fncoh::Scalar;
    using Nested = fncoh::Scalar;
    // Declared non-complex: with Real = Scalar itself, IsComplex would make
    // Eigen's ScalarBinaryOpTraits specializations ambiguous. Conjugation is
    // never delegated to Eigen (see conjTranspose in linalg.hpp).
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 80,
    };
    static fncoh::Scalar epsilon() { return fncoh::Scalar(0); }
    static fncoh::Scalar dummy_precision() { return fncoh::Scalar(0); }
    static int digits10() { return 0; }
};

namespace internal {
template <>
struct conj_helper<fncoh::Scalar, fncoh::Scalar, false, false> {
    fncoh::Scalar pmadd(const fncoh::Scalar& x, const fncoh::Scalar& y,
                        const fncoh::Scalar& c) const { return c + x * y; }
    fncoh::Scalar pmul(const fncoh::Scalar& x, const fncoh::Scalar& y) const { return x * y; }
};
}  // namespace internal

}  // namespace Eigen
