#include "fncoh/structures.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>

namespace fncoh {
namespace {

Form phi7() {
    Form f = Form::basis(7, {1, 2, 3}) + Form::basis(7, {1, 4, 5}) + Form::basis(7, {1, 6, 7})
           + Form::basis(7, {2, 4, 6});
    f -= Form::basis(7, {2, 5, 7});
    f -= Form::basis(7, {3, 4, 7});
    f -= Form::basis(7, {3, 5, 6});
    return f;
}

Form starPhi7() {
    Form f = Form::basis(7, {4, 5, 6, 7}) + Form::basis(7, {2, 3, 6, 7}) + Form::basis(7, {2, 3, 4, 5})
           + Form::basis(7, {1, 3, 5, 7});
    f -= Form::basis(7, {1, 3, 4, 6});
    f -= Form::basis(7, {1, 2, 5, 6});
    f -= Form::basis(7, {1, 2, 4, 7});
    return f;
}

/// Relabel axes 1..7 of a 7-dim form onto axes 1..7 of R^8 (bit shift by one;
/// axis 0 stays free for the extra coordinate).
Form shiftTo8(const Form& a) {
    Form r(8, a.degree());
    for (const auto& [m, c] : a.terms())
        r.add(static_cast<BasisMask>(m << 1), c);
    return r;
}

Form cayley8() {
    Form e0(8, 1);
    e0.add(BasisMask(1), Scalar(1));
    return wedge(e0, shiftTo8(phi7())) + shiftTo8(starPhi7());
}

BasisMask bit(int axis) { return static_cast<BasisMask>(BasisMask(1) << axis); }

Vector vectorFormToVec(const VectorForm& K) {
    auto masks = basisMasks(K.dim(), K.degree());
    const auto per = static_cast<Eigen::Index>(masks.size());
    Vector v(per * K.dim());
    for (int j = 0; j < K.dim(); ++j)
        v.segment(j * per, per) = formToVec(K.component(j), masks);
    return v;
}

Vector matrixToVec(const Matrix& X) {
    Vector v(X.rows() * X.cols());
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < X.rows(); ++i)
        for (Eigen::Index j = 0; j < X.cols(); ++j) v(k++) = X(i, j);
    return v;
}

Subalgebra stabilizerFrom(int n, const std::vector<Matrix>& ambient,
                          const std::function<Vector(const Matrix&)>& act) {
    const auto cols = static_cast<Eigen::Index>(ambient.size());
    Vector first = act(ambient.front());
    Matrix M(first.size(), cols);
    M.col(0) = first;
    for (Eigen::Index c = 1; c < cols; ++c) M.col(c) = act(ambient[c]);
    Matrix K = kernelBasis(M);

    Subalgebra h;
    h.n = n;
    for (Eigen::Index c = 0; c < K.cols(); ++c) {
        Matrix X = zeroMatrix(n, n);
        for (Eigen::Index m = 0; m < cols; ++m)
            if (!K(m, c).isZero()) X += K(m, c) * ambient[m];
        h.basis.push_back(std::move(X));
    }

    // closure under commutator, checked exactly against the span
    Matrix span(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(h.basis.size()));
    for (std::size_t b = 0; b < h.basis.size(); ++b)
        span.col(static_cast<Eigen::Index>(b)) = matrixToVec(h.basis[b]);
    h.closed = true;
    for (std::size_t a = 0; a < h.basis.size() && h.closed; ++a)
        for (std::size_t b = a + 1; b < h.basis.size() && h.closed; ++b) {
            Matrix comm = h.basis[a] * h.basis[b] - h.basis[b] * h.basis[a];
            Matrix v(static_cast<Eigen::Index>(n) * n, 1);
            v.col(0) = matrixToVec(comm);
            if (!spanContains(span, v)) h.closed = false;
        }
    return h;
}

/// x^(1/9) of a positive rational, as a decimal string with ~40 significant
/// digits (Newton iteration at 512-bit precision).
std::string ninthRootInverseDecimal(const mpq_class& d) {
    mpf_class t(d, 512);
    mpf_class x(0, 512);
    // t^(1/8) by three square roots is a good Newton seed for t^(1/9)
    mpf_sqrt(x.get_mpf_t(), t.get_mpf_t());
    mpf_sqrt(x.get_mpf_t(), x.get_mpf_t());
    mpf_sqrt(x.get_mpf_t(), x.get_mpf_t());
    for (int it = 0; it < 80; ++it) {
        mpf_class x8 = x;
        for (int p = 0; p < 3; ++p) x8 *= x8;  // x^8
        mpf_class next = (8 * x + t / x8) / 9;
        if (next == x) break;
        x = next;
    }
    mpf_class inv = 1 / x;
    mp_exp_t exp10 = 0;
    std::string digits = inv.get_str(exp10, 10, 40);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(digits.begin());
    }
    if (digits.empty()) return "0";
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

std::vector<mpq_class> rationalRoots(std::vector<mpq_class> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};

    mpz_class den(1);
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> a;
    a.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        mpq_class s = c * den;
        a.push_back(s.get_num());
    }

    std::vector<mpq_class> roots;
    std::size_t lo = 0;
    while (lo < a.size() && a[lo] == 0) ++lo;
    if (lo > 0) roots.emplace_back(0);
    if (lo + 1 >= a.size()) return roots;

    mpz_class c0 = abs(a[lo]), cd = abs(a.back());
    if (!c0.fits_ulong_p() || !cd.fits_ulong_p())
        throw std::runtime_error("rationalRoots: coefficient too large for divisor search");
    auto divisors = [](unsigned long v) {
        std::vector<unsigned long> out;
        for (unsigned long d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                out.push_back(d);
                out.push_back(v / d);
            }
        return out;
    };
    auto evalAt = [&](const mpq_class& x) {
        mpq_class acc(0);
        for (std::size_t j = a.size(); j-- > lo;) acc = acc * x + mpq_class(a[j]);
        return acc;
    };
    std::set<mpq_class> seen;
    for (unsigned long p : divisors(c0.get_ui()))
        for (unsigned long q : divisors(cd.get_ui()))
            for (int s : {1, -1}) {
                mpq_class cand(mpz_class(p) * s, mpz_class(q));
                cand.canonicalize();
                if (!seen.insert(cand).second) continue;
                if (evalAt(cand) == 0) roots.push_back(cand);
            }
    return roots;
}

/// Monic annihilator of the Krylov sequence v, Cv, C^2 v, ...
std::vector<mpq_class> krylovAnnihilator(const Matrix& C, const Vector& v0) {
    const Eigen::Index N = C.rows();
    std::vector<Vector> krylov{v0};
    for (Eigen::Index m = 1; m <= N; ++m) {
        krylov.push_back(C * krylov.back());
        Matrix K(N, static_cast<Eigen::Index>(krylov.size()));
        for (std::size_t j = 0; j < krylov.size(); ++j)
            K.col(static_cast<Eigen::Index>(j)) = krylov[j];
        Matrix ker = kernelBasis(K);
        if (ker.cols() == 0) continue;
        std::vector<mpq_class> poly;
        Scalar lead = ker(ker.rows() - 1, 0);
        Scalar inv = lead.inverse();
        for (Eigen::Index j = 0; j < ker.rows(); ++j) {
            Scalar c = ker(j, 0) * inv;
            if (!c.isReal()) throw std::runtime_error("krylovAnnihilator: non-real coefficient");
            poly.push_back(c.re());
        }
        return poly;
    }
    throw std::runtime_error("krylovAnnihilator: no dependency found");
}

std::vector<mpq_class> casimirEigenvalues(const Matrix& C) {
    const Eigen::Index N = C.rows();
    std::set<mpq_class> values;
    for (int attempt = 0; attempt < 3; ++attempt) {
        Vector v(N);
        for (Eigen::Index j = 0; j < N; ++j) {
            long x = attempt == 0 ? j + 1 : (j * j + 3 * j + 1) % (89 + 8 * attempt) + 1;
            v(j) = Scalar(x);
        }
        for (const auto& r : rationalRoots(krylovAnnihilator(C, v))) values.insert(r);

        Eigen::Index covered = 0;
        for (const auto& lam : values) {
            Matrix S = C;
            for (Eigen::Index j = 0; j < N; ++j) S(j, j) -= Scalar(lam);
            covered += N - rank(S);
        }
        if (covered == N) return {values.begin(), values.end()};
    }
    throw std::runtime_error("casimirEigenvalues: eigenspaces do not exhaust the space");
}

Matrix starMatrix(int n, int degree) {
    return matrixOfMap(n, degree, degree, [](const Form& f) { return hodgeStar(f); });
}

const Subalgebra& canonicalStabilizer(StructureKind kind) {
    static std::map<StructureKind, Subalgebra> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(kind);
    if (it == cache.end()) {
        Form T = kind == StructureKind::G2 ? phi7() : cayley8();
        it = cache.emplace(kind, stabilizerAlgebra(T, true)).first;
    }
    return it->second;
}

Matrix casimirOn(StructureKind kind, int degree) {
    const Subalgebra& h = canonicalStabilizer(kind);
    const int n = dimOf(kind);
    const auto d = static_cast<Eigen::Index>(h.basis.size());

    Matrix gram(d, d);
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = a; b < d; ++b) {
            Scalar t(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) t += h.basis[a](i, j) * h.basis[b](i, j);
            gram(a, b) = t;  // trace(X Y^T), positive definite on so(n)
            gram(b, a) = t;
        }
    Matrix ginv = inverseMatrix(gram);

    std::vector<Matrix> rho;
    rho.reserve(h.basis.size());
    for (const auto& X : h.basis)
        rho.push_back(matrixOfMap(n, degree, degree,
                                  [&X](const Form& f) { return glActForm(X, f); }));

    const auto N = rho.front().rows();
    Matrix C = zeroMatrix(N, N);
    for (Eigen::Index a = 0; a < d; ++a) {
        Matrix dual = zeroMatrix(N, N);
        for (Eigen::Index b = 0; b < d; ++b)
            if (!ginv(b, a).isZero()) dual += ginv(b, a) * rho[b];
        C += rho[a] * dual;
    }
    return C;
}

std::vector<IsotypicComponent> splitByProjectors(const std::vector<Matrix>& projectors) {
    std::vector<IsotypicComponent> out;
    for (const auto& P : projectors) {
        int r = rank(P);
        if (r == 0) continue;
        out.push_back({r, P});
    }
    std::sort(out.begin(), out.end(),
              [](const IsotypicComponent& x, const IsotypicComponent& y) {
                  return x.irrepDim < y.irrepDim;
              });
    return out;
}

bool dimsMatch(const std::vector<IsotypicComponent>& comps, const std::vector<int>& expected) {
    if (comps.size() != expected.size()) return false;
    std::vector<int> got;
    for (const auto& c : comps) got.push_back(c.irrepDim);
    std::vector<int> want = expected;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

std::vector<IsotypicComponent> buildComponents(StructureKind kind, int degree) {
    const int n = dimOf(kind);
    Matrix C = casimirOn(kind, degree);
    const Eigen::Index N = C.rows();
    auto eigenvalues = casimirEigenvalues(C);

    std::vector<Matrix> projectors;
    for (const auto& lam : eigenvalues) {
        Matrix P = identityMatrix(N);
        for (const auto& mu : eigenvalues) {
            if (mu == lam) continue;
            Matrix S = C;
            for (Eigen::Index j = 0; j < N; ++j) S(j, j) -= Scalar(mu);
            Scalar f = Scalar(mpq_class(lam - mu)).inverse();
            P = P * S * f;
        }
        projectors.push_back(std::move(P));
    }
    Matrix sum = zeroMatrix(N, N);
    for (const auto& P : projectors) sum += P;
    if (!matricesEqual(sum, identityMatrix(N)))
        throw std::runtime_error("isotypicComponents: eigenprojectors do not sum to identity");

    auto comps = splitByProjectors(projectors);
    if (dimsMatch(comps, expectedTypeDims(kind, degree))) return comps;

    // Casimir eigenvalue collision: refine through the +-1 eigenspaces of the
    // Hodge star (middle degree), then re-check the expected table.
    if (2 * degree == n) {
        Matrix S = starMatrix(n, degree);
        Scalar half(1, 2);
        Matrix psd = (identityMatrix(N) + S) * half;
        Matrix pasd = (identityMatrix(N) - S) * half;
        std::vector<Matrix> refined;
        for (const auto& P : projectors) {
            refined.push_back(psd * P);
            refined.push_back(pasd * P);
        }
        comps = splitByProjectors(refined);
        if (dimsMatch(comps, expectedTypeDims(kind, degree))) return comps;
    }
    throw std::runtime_error("isotypicComponents: eigenspace dimensions do not match the type table");
}

void appendFormCheck(std::vector<CheckRecord>& out, const std::string& id,
                     StructureKind kind, const Form& got, const Form& expect) {
    CheckRecord r = makeCheck("identities", id, kindName(kind), expect.str(), got.str(),
                              got == expect);
    r.degree = got.degree();
    out.push_back(std::move(r));
}

void appendMatrixCheck(std::vector<CheckRecord>& out, const std::string& id,
                       StructureKind kind, int degree, const Matrix& got, const Matrix& expect) {
    bool ok = matricesEqual(got, expect);
    CheckRecord r = makeCheck("identities", id, kindName(kind), "matrices equal",
                              ok ? "matrices equal" : "matrices differ", ok);
    r.degree = degree;
    out.push_back(std::move(r));
}

void appendSpanCheck(std::vector<CheckRecord>& out, const std::string& id,
                     StructureKind kind, int degree, const Matrix& got, const Matrix& expect) {
    bool ok = spanEquals(got, expect);
    CheckRecord r = makeCheck("identities", id, kindName(kind),
                              "subspaces equal (dim " + std::to_string(rank(expect)) + ")",
                              ok ? "subspaces equal" : "subspaces differ (dim " + std::to_string(rank(got)) + ")",
                              ok);
    r.degree = degree;
    out.push_back(std::move(r));
}

}  // namespace

Form canonicalForm(StructureKind kind, WhichForm which) {
    if (kind == StructureKind::G2 && which == WhichForm::Phi) return phi7();
    if (kind == StructureKind::G2 && which == WhichForm::StarPhi) return starPhi7();
    if (kind == StructureKind::Spin7 && which == WhichForm::Cayley) return cayley8();
    throw std::invalid_argument("canonicalForm: incompatible structure/form pair");
}

Form parallel4Form(StructureKind kind) {
    return kind == StructureKind::G2 ? starPhi7() : cayley8();
}

Form glActForm(const Matrix& X, const Form& a) {
    const int n = a.dim();
    Form r(n, a.degree());
    for (const auto& [m, c] : a.terms())
        for (int i = 0; i < n; ++i) {
            if ((m & bit(i)) == 0) continue;
            for (int j = 0; j < n; ++j) {
                const Scalar& x = X(i, j);
                if (x.isZero()) continue;
                if (j == i) {
                    r.add(m, -(c * x));
                    continue;
                }
                if ((m & bit(j)) != 0) continue;
                BasisMask m2 = static_cast<BasisMask>((m & ~bit(i)) | bit(j));
                Scalar t = c * x;
                if (extractSign(m, i) * extractSign(m2, j) < 0) t = -t;
                r.add(m2, -t);
            }
        }
    return r;
}

VectorForm glActVectorForm(const Matrix& X, const VectorForm& K) {
    const int n = K.dim();
    VectorForm r(n, K.degree());
    for (int b = 0; b < n; ++b) {
        r.component(b) = glActForm(X, K.component(b));
        for (int a = 0; a < n; ++a)
            if (!X(b, a).isZero()) r.component(b) += X(b, a) * K.component(a);
    }
    return r;
}

std::vector<Matrix> glBasis(int n) {
    std::vector<Matrix> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Matrix E = zeroMatrix(n, n);
            E(a, b) = Scalar(1);
            out.push_back(std::move(E));
        }
    return out;
}

std::vector<Matrix> soBasis(int n) {
    std::vector<Matrix> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Matrix E = zeroMatrix(n, n);
            E(a, b) = Scalar(1);
            E(b, a) = Scalar(-1);
            out.push_back(std::move(E));
        }
    return out;
}

Subalgebra stabilizerAlgebra(const Form& T, bool soAmbient) {
    const int n = T.dim();
    auto masks = basisMasks(n, T.degree());
    auto ambient = soAmbient ? soBasis(n) : glBasis(n);
    return stabilizerFrom(n, ambient, [&](const Matrix& X) {
        return formToVec(glActForm(X, T), masks);
    });
}

Subalgebra stabilizerAlgebra(const VectorForm& T, bool soAmbient) {
    const int n = T.dim();
    auto ambient = soAmbient ? soBasis(n) : glBasis(n);
    return stabilizerFrom(n, ambient, [&](const Matrix& X) {
        return vectorFormToVec(glActVectorForm(X, T));
    });
}

MetricResult metricFrom3Form(const Form& phi3) {
    if (phi3.dim() != 7 || phi3.degree() != 3)
        throw std::invalid_argument("metricFrom3Form: expects a 3-form on R^7");
    for (const auto& [m, c] : phi3.terms())
        if (!c.isReal())
            throw std::invalid_argument("metricFrom3Form: coefficients must be real");

    const BasisMask full = 0x7F;
    Matrix B = zeroMatrix(7, 7);
    Scalar sixth(1, 6);
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            Form top = wedge(wedge(interiorAxis(i, phi3), interiorAxis(j, phi3)), phi3);
            Scalar v = sixth * top.coeff(full);
            B(i, j) = v;
            B(j, i) = v;
        }

    for (int k = 1; k <= 7; ++k) {
        Matrix minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor(i, j) = B(i, j);
        if (determinant(minor).re() <= 0)
            throw std::invalid_argument("not a G2-structure on this basis orientation");
    }

    mpq_class det = determinant(B).re();
    mpz_class rootNum, rootDen;
    bool exactNum = mpz_root(rootNum.get_mpz_t(), det.get_num().get_mpz_t(), 9) != 0;
    bool exactDen = mpz_root(rootDen.get_mpz_t(), det.get_den().get_mpz_t(), 9) != 0;

    MetricResult result;
    if (exactNum && exactDen) {
        mpq_class root(rootNum, rootDen);
        root.canonicalize();
        Scalar f = Scalar(root).inverse();
        result.g = B * f;
        result.exact = true;
    } else {
        result.g = B;
        result.exact = false;
        result.scale = ninthRootInverseDecimal(det);
    }
    return result;
}

const std::vector<int>& expectedTypeDims(StructureKind kind, int degree) {
    static const std::vector<std::vector<int>> g2{{1}, {7}, {7, 14}, {1, 7, 27},
                                                 {1, 7, 27}, {7, 14}, {7}, {1}};
    static const std::vector<std::vector<int>> spin7{{1}, {8}, {7, 21}, {8, 48}, {1, 7, 27, 35},
                                                    {8, 48}, {7, 21}, {8}, {1}};
    const auto& table = kind == StructureKind::G2 ? g2 : spin7;
    if (degree < 0 || degree >= static_cast<int>(table.size()))
        throw std::invalid_argument("expectedTypeDims: degree out of range");
    return table[degree];
}

const std::vector<IsotypicComponent>& isotypicComponents(StructureKind kind, int degree) {
    static std::map<std::pair<int, int>, std::vector<IsotypicComponent>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(kind), degree);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, buildComponents(kind, degree)).first;
    return it->second;
}

const Matrix& typeProjector(StructureKind kind, int degree, int irrepDim) {
    for (const auto& comp : isotypicComponents(kind, degree))
        if (comp.irrepDim == irrepDim) return comp.projector;
    throw std::invalid_argument("typeProjector: no such component");
}

Form typeProject(StructureKind kind, int degree, int irrepDim, const Form& a) {
    auto masks = basisMasks(a.dim(), degree);
    Vector v = typeProjector(kind, degree, irrepDim) * formToVec(a, masks);
    return vecToForm(v, masks, a.dim(), degree);
}

Matrix typeSpaceBasis(StructureKind kind, int degree, int irrepDim) {
    return imageBasis(typeProjector(kind, degree, irrepDim));
}

std::vector<CheckRecord> identitySuite() {
    std::vector<CheckRecord> out;
    const Form phi = phi7();
    const Form sphi = starPhi7();
    const Form cay = cayley8();

    // *phi ^ (i_u phi) = 3 * u^flat and the two -4 * u^flat contractions
    for (int u = 0; u < 7; ++u) {
        Form uflat = flat(basisVec(7, u));
        Form starU = hodgeStar(uflat);
        appendFormCheck(out, "lemma-6.1-form" + std::to_string(u + 1), StructureKind::G2,
                        wedge(sphi, interiorAxis(u, phi)), Scalar(3) * starU);
        appendFormCheck(out, "lemma-6.1-form" + std::to_string(u + 8), StructureKind::G2,
                        wedge(hodgeStar(wedge(uflat, phi)), phi), Scalar(-4) * starU);
        appendFormCheck(out, "lemma-6.1-form" + std::to_string(u + 15), StructureKind::G2,
                        wedge(phi, interiorAxis(u, sphi)), Scalar(-4) * starU);
    }

    // the 2-form projectors against their closed-form wedge expressions
    Scalar third(1, 3);
    Matrix pi7 = matrixOfMap(7, 2, 2, [&](const Form& a) {
        return third * (a + hodgeStar(wedge(a, phi)));
    });
    Matrix pi14 = matrixOfMap(7, 2, 2, [&](const Form& a) {
        return third * (Scalar(2) * a - hodgeStar(wedge(a, phi)));
    });
    appendMatrixCheck(out, "eq-3.7-pi7", StructureKind::G2, 2, typeProjector(StructureKind::G2, 2, 7), pi7);
    appendMatrixCheck(out, "eq-3.7-pi14", StructureKind::G2, 2, typeProjector(StructureKind::G2, 2, 14), pi14);

    // membership characterizations of the G2 type spaces
    {
        Matrix span7(21, 7);
        auto masks2 = basisMasks(7, 2);
        for (int v = 0; v < 7; ++v) span7.col(v) = formToVec(interiorAxis(v, phi), masks2);
        appendSpanCheck(out, "eq-3.6-lambda2-7", StructureKind::G2, 2,
                        typeSpaceBasis(StructureKind::G2, 2, 7), span7);

        Matrix wedgeStarPhi = matrixOfMap(7, 2, 6, [&](const Form& a) { return wedge(a, sphi); });
        appendSpanCheck(out, "eq-3.6-lambda2-14", StructureKind::G2, 2,
                        typeSpaceBasis(StructureKind::G2, 2, 14), kernelBasis(wedgeStarPhi));

        auto masks3 = basisMasks(7, 3);
        Matrix span1(35, 1);
        span1.col(0) = formToVec(phi, masks3);
        appendSpanCheck(out, "eq-3.6-lambda3-1", StructureKind::G2, 3,
                        typeSpaceBasis(StructureKind::G2, 3, 1), span1);

        Matrix span37(35, 7);
        for (int v = 0; v < 7; ++v) span37.col(v) = formToVec(interiorAxis(v, sphi), masks3);
        appendSpanCheck(out, "eq-3.6-lambda3-7", StructureKind::G2, 3,
                        typeSpaceBasis(StructureKind::G2, 3, 7), span37);

        Matrix wPhi = matrixOfMap(7, 3, 6, [&](const Form& a) { return wedge(a, phi); });
        Matrix wStar = matrixOfMap(7, 3, 7, [&](const Form& a) { return wedge(a, sphi); });
        appendSpanCheck(out, "eq-3.6-lambda3-27", StructureKind::G2, 3,
                        typeSpaceBasis(StructureKind::G2, 3, 27),
                        spanIntersect(kernelBasis(wPhi), kernelBasis(wStar)));

        auto masks4 = basisMasks(7, 4);
        Matrix span41(35, 1);
        span41.col(0) = formToVec(sphi, masks4);
        appendSpanCheck(out, "eq-3.6-lambda4-1", StructureKind::G2, 4,
                        typeSpaceBasis(StructureKind::G2, 4, 1), span41);

        Matrix span47(35, 7);
        for (int v = 0; v < 7; ++v)
            span47.col(v) = formToVec(wedge(flat(basisVec(7, v)), phi), masks4);
        appendSpanCheck(out, "eq-3.6-lambda4-7", StructureKind::G2, 4,
                        typeSpaceBasis(StructureKind::G2, 4, 7), span47);

        auto masks5 = basisMasks(7, 5);
        Matrix span57(21, 7);
        for (int v = 0; v < 7; ++v)
            span57.col(v) = formToVec(wedge(flat(basisVec(7, v)), sphi), masks5);
        appendSpanCheck(out, "eq-3.6-lambda5-7", StructureKind::G2, 5,
                        typeSpaceBasis(StructureKind::G2, 5, 7), span57);

        // Lambda^5_14: annihilated by wedging with every i_v phi
        Matrix rows(0, 21);
        for (int v = 0; v < 7; ++v) {
            Matrix Mv = matrixOfMap(7, 5, 7, [&](const Form& a) {
                return wedge(a, interiorAxis(v, phi));
            });
            rows = rows.rows() == 0 ? Mv : vstack(rows, Mv);
        }
        appendSpanCheck(out, "eq-3.6-lambda5-14", StructureKind::G2, 5,
                        typeSpaceBasis(StructureKind::G2, 5, 14), kernelBasis(rows));
    }

    // Hodge star maps Lambda^k_l onto Lambda^{7-k}_l
    for (int k = 2; k <= 3; ++k)
        for (int l : expectedTypeDims(StructureKind::G2, k)) {
            Matrix star = matrixOfMap(7, k, k == 2 ? 5 : 4, [](const Form& a) { return hodgeStar(a); });
            Matrix lhs = star * typeProjector(StructureKind::G2, k, l);
            Matrix rhs = typeProjector(StructureKind::G2, 7 - k, l) * star;
            appendMatrixCheck(out, "eq-3.5-hodge-k" + std::to_string(k) + "-" + std::to_string(l),
                              StructureKind::G2, k, lhs, rhs);
        }

    // eigenvalues of alpha -> *(alpha ^ phi) on the 2-form pieces
    {
        Matrix M = matrixOfMap(7, 2, 2, [&](const Form& a) { return hodgeStar(wedge(a, phi)); });
        const Matrix& p7 = typeProjector(StructureKind::G2, 2, 7);
        const Matrix& p14 = typeProjector(StructureKind::G2, 2, 14);
        appendMatrixCheck(out, "lemma-6.2-eigen7", StructureKind::G2, 2, M * p7, Scalar(2) * p7);
        appendMatrixCheck(out, "lemma-6.2-eigen14", StructureKind::G2, 2, M * p14, Scalar(-1) * p14);
    }

    appendFormCheck(out, "eq-3.3-starphi", StructureKind::G2, hodgeStar(phi), sphi);
    {
        Scalar n2 = inner(phi, phi);
        out.push_back(makeCheck("identities", "eq-3.1-norm", "g2", "7", n2.str(), n2 == Scalar(7)));
    }

    // Spin7 side
    appendFormCheck(out, "eq-4.1-selfdual", StructureKind::Spin7, hodgeStar(cay), cay);
    {
        Scalar n2 = inner(cay, cay);
        out.push_back(makeCheck("identities", "eq-4.1-norm", "spin7", "14", n2.str(), n2 == Scalar(14)));
    }
    {
        Matrix M = matrixOfMap(8, 2, 2, [&](const Form& a) { return hodgeStar(wedge(cay, a)); });
        const Matrix& p7 = typeProjector(StructureKind::Spin7, 2, 7);
        const Matrix& p21 = typeProjector(StructureKind::Spin7, 2, 21);
        appendMatrixCheck(out, "lemma-6.3-eigen7", StructureKind::Spin7, 2, M * p7, Scalar(3) * p7);
        appendMatrixCheck(out, "lemma-6.3-eigen21", StructureKind::Spin7, 2, M * p21, Scalar(-1) * p21);

        auto masks3 = basisMasks(8, 3);
        Matrix span8(static_cast<Eigen::Index>(masks3.size()), 8);
        for (int v = 0; v < 8; ++v) span8.col(v) = formToVec(interiorAxis(v, cay), masks3);
        appendSpanCheck(out, "eq-4.2-lambda3-8", StructureKind::Spin7, 3,
                        typeSpaceBasis(StructureKind::Spin7, 3, 8), span8);

        Matrix wCay = matrixOfMap(8, 3, 7, [&](const Form& a) { return wedge(a, cay); });
        appendSpanCheck(out, "eq-4.2-lambda3-48", StructureKind::Spin7, 3,
                        typeSpaceBasis(StructureKind::Spin7, 3, 48), kernelBasis(wCay));
    }

    std::sort(out.begin(), out.end(), [](const CheckRecord& a, const CheckRecord& b) {
        return std::tie(a.suite, a.check_id, a.freq) < std::tie(b.suite, b.check_id, b.freq);
    });
    return out;
}

}  // namespace fncoh
