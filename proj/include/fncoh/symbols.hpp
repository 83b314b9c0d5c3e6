#pragma once

#include "fncoh/linalg.hpp"
#include "fncoh/rng.hpp"
#include "fncoh/structures.hpp"

#include <stdexcept>
#include <vector>

namespace fncoh {

/// Exact matrix of a constant-coefficient linear map between form spaces, in
/// the canonical increasing-tuple bases. degTo = -1 marks a composite range
/// (stacked blocks) where only the row count is meaningful.
struct LinearBlock {
    int dim = 0;
    int degFrom = 0;
    int degTo = 0;
    Matrix entries;
};

inline bool vecIsZero(const Vec& v) {
    for (const auto& c : v)
        if (!c.isZero()) return false;
    return true;
}

/// Symbol of L_Psi at covector xi in degree l (target degree): the matrix of
/// alpha -> (iota_{xi#} Psi) ^ alpha from Lambda^{l-deg(Psi)+1} to Lambda^l.
inline LinearBlock symbolOfL(const Form& psi, const Vec& xi, int l) {
    if (vecIsZero(xi)) throw std::invalid_argument("symbolOfL: zero covector");
    const int n = psi.dim();
    const int dFrom = l - psi.degree() + 1;
    if (dFrom < 0 || l > n) throw std::invalid_argument("symbolOfL: degree out of range");
    Form ixPsi = interior(xi, psi);
    LinearBlock b{n, dFrom, l, {}};
    b.entries = matrixOfMap(n, dFrom, l, [&](const Form& a) { return wedge(ixPsi, a); });
    return b;
}

struct RankProfile {
    int dimKernel = 0;
    int dimImage = 0;
};

inline RankProfile rankProfile(const LinearBlock& b) {
    int r = rank(b.entries);
    return {static_cast<int>(b.entries.cols()) - r, r};
}

inline std::size_t binomialRows(int n, int l) {
    return basisMasks(n, l).size();
}

enum class Ellipticity { InjectiveAll, SurjectiveAll, Neither, Mixed };

inline const char* ellipticityName(Ellipticity e) {
    switch (e) {
        case Ellipticity::InjectiveAll: return "injective-all";
        case Ellipticity::SurjectiveAll: return "surjective-all";
        case Ellipticity::Neither: return "neither";
        case Ellipticity::Mixed: return "mixed";
    }
    return "?";
}

inline Ellipticity ellipticityClassify(const Form& psi, int l, const std::vector<Vec>& xis) {
    if (xis.empty()) throw std::invalid_argument("ellipticityClassify: empty sample");
    bool allInj = true, allSurj = true, anyInj = false, anySurj = false;
    for (const auto& xi : xis) {
        RankProfile p = rankProfile(symbolOfL(psi, xi, l));
        bool inj = p.dimKernel == 0;
        bool surj = p.dimImage == static_cast<int>(binomialRows(psi.dim(), l));
        allInj &= inj;
        allSurj &= surj;
        anyInj |= inj;
        anySurj |= surj;
    }
    if (allInj) return Ellipticity::InjectiveAll;
    if (allSurj) return Ellipticity::SurjectiveAll;
    if (!anyInj && !anySurj) return Ellipticity::Neither;
    return Ellipticity::Mixed;
}

enum class AuxSymbolKind { Sigma1G2, Sigma2G2, SigmaSpin7 };

/// First-order auxiliary symbols from the infinite-dimensionality arguments:
/// a projector composed with a wedge, minus an interior product, stacked as
/// [projected wedge block; interior block].
inline LinearBlock auxSymbol(AuxSymbolKind which, const Vec& xi) {
    if (vecIsZero(xi)) throw std::invalid_argument("auxSymbol: zero covector");
    StructureKind kind = which == AuxSymbolKind::SigmaSpin7 ? StructureKind::Spin7 : StructureKind::G2;
    const int n = dimOf(kind);
    int dFrom = which == AuxSymbolKind::Sigma1G2 ? 1 : 2;
    int label = which == AuxSymbolKind::Sigma1G2 ? 14 : (which == AuxSymbolKind::Sigma2G2 ? 27 : 48);
    Form xiFlat = flat(xi);

    auto fromMasks = basisMasks(n, dFrom);
    auto upperMasks = basisMasks(n, dFrom + 1);
    auto lowerMasks = basisMasks(n, dFrom - 1);
    const auto rows = static_cast<Eigen::Index>(upperMasks.size() + lowerMasks.size());
    LinearBlock b{n, dFrom, -1, zeroMatrix(rows, static_cast<Eigen::Index>(fromMasks.size()))};
    for (std::size_t j = 0; j < fromMasks.size(); ++j) {
        Form e(n, dFrom);
        e.add(fromMasks[j], Scalar(1));
        Vector top = formToVec(typeProject(kind, dFrom + 1, label, wedge(xiFlat, e)), upperMasks);
        Vector bottom = formToVec(-interior(xi, e), lowerMasks);
        b.entries.block(0, static_cast<Eigen::Index>(j), top.size(), 1) = top;
        b.entries.block(top.size(), static_cast<Eigen::Index>(j), bottom.size(), 1) = bottom;
    }
    return b;
}

inline long long binomial(long long m, long long r) {
    if (r < 0 || r > m) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
    if (!b.fits_slong_p()) throw std::overflow_error("binomial: result too large");
    return b.get_si();
}

/// Codimension count from comparing Taylor coefficients of order N sections
/// against order N+d equations: C(N+n,n) rankF - C(N+d+n,n) rankE.
inline long long taylorCodimBound(long long rankE, long long rankF, int n, int d, long long N) {
    return binomial(N + n, n) * rankF - binomial(N + d + n, n) * rankE;
}

/// Default covector sweep: all +-e^u followed by seeded random integer
/// covectors with entries in [-3, 3], never zero.
inline std::vector<Vec> defaultXiSweep(int n, int samples, std::uint64_t seed) {
    std::vector<Vec> out;
    for (int u = 0; u < n; ++u) {
        Vec v = basisVec(n, u);
        out.push_back(v);
        for (auto& c : v) c = -c;
        out.push_back(v);
    }
    Rng rng(seed);
    while (static_cast<int>(out.size()) < 2 * n + samples) {
        Vec v(n);
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = Scalar(rng.intIn(-3, 3));
        if (!vecIsZero(v)) out.push_back(v);
    }
    return out;
}

}  // namespace fncoh
