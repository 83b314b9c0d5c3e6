#pragma once

#include "fncoh/check.hpp"
#include "fncoh/form.hpp"
#include "fncoh/linalg.hpp"

#include <string>
#include <vector>

namespace fncoh {

enum class StructureKind { G2, Spin7 };

inline int dimOf(StructureKind k) { return k == StructureKind::G2 ? 7 : 8; }
inline const char* kindName(StructureKind k) { return k == StructureKind::G2 ? "g2" : "spin7"; }

/// Phi/StarPhi live on R^7 (G2); Cayley is the self-dual 4-form on R^8 (Spin7).
enum class WhichForm { Phi, StarPhi, Cayley };

Form canonicalForm(StructureKind kind, WhichForm which);

/// The parallel 4-form the whole verification pipeline is built around:
/// *phi for G2, the Cayley form for Spin7.
Form parallel4Form(StructureKind kind);

/// gl(n) action on covectors, X.e^i = -sum_j X(i,j) e^j, extended to Lambda^k
/// as a derivation.
Form glActForm(const Matrix& X, const Form& a);

/// Action on Lambda^k (x) R^n: derivation on the form slot plus X on the
/// vector slot (X e_a = sum_b X(b,a) e_b).
VectorForm glActVectorForm(const Matrix& X, const VectorForm& K);

std::vector<Matrix> glBasis(int n);  // elementary matrices E_ab
std::vector<Matrix> soBasis(int n);  // E_ab - E_ba, a < b

struct Subalgebra {
    int n = 0;
    std::vector<Matrix> basis;
    bool closed = false;  // closure under commutator, verified at construction
    int dim() const { return static_cast<int>(basis.size()); }
};

Subalgebra stabilizerAlgebra(const Form& T, bool soAmbient);
Subalgebra stabilizerAlgebra(const VectorForm& T, bool soAmbient);

struct MetricResult {
    Matrix g;
    bool exact = true;
    /// Decimal expansion of det(B)^{-1/9} when it is irrational; g then holds
    /// the unnormalized bilinear form B.
    std::string scale;
};

/// Metric of a positive 3-form on R^7, normalized so the canonical form gives
/// the identity. Throws std::invalid_argument when the associated bilinear
/// form is not positive definite.
MetricResult metricFrom3Form(const Form& phi3);

struct IsotypicComponent {
    int irrepDim = 0;  // label l of Lambda^k_l; equals the image dimension
    Matrix projector;
};

const std::vector<int>& expectedTypeDims(StructureKind kind, int degree);

/// Isotypic projectors on Lambda^k for the canonical structure, ordered by
/// label. Memoized; throws when the eigenspace split cannot be labelled.
const std::vector<IsotypicComponent>& isotypicComponents(StructureKind kind, int degree);

const Matrix& typeProjector(StructureKind kind, int degree, int irrepDim);
Form typeProject(StructureKind kind, int degree, int irrepDim, const Form& a);
Matrix typeSpaceBasis(StructureKind kind, int degree, int irrepDim);

/// Exact pointwise identities of the canonical structures.
std::vector<CheckRecord> identitySuite();

}  // namespace fncoh
