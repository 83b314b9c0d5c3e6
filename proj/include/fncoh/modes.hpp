#pragma once

#include "fncoh/check.hpp"
#include "fncoh/symbols.hpp"
#include "fncoh/trig.hpp"

#include <map>
#include <string>
#include <vector>

namespace fncoh {

/// One Fourier mode of the degree-3 differential attached to Psi: the blocks
/// eps[l] send Lambda^l to Lambda^{l+3} by (iota_{k#}Psi) ^ (-), and the full
/// operator at this mode is i*eps. d and dstar blocks are kept alongside so
/// subspace constructions stay in one coordinate system.
struct ModeComplex {
    StructureKind kind;
    int n = 0;
    Freq freq;
    std::vector<Matrix> eps;    // eps[l]: Lambda^l -> Lambda^{l+3}
    std::vector<Matrix> dmat;   // i k^flat ^ (-): Lambda^l -> Lambda^{l+1}
    std::vector<Matrix> dstar;  // -i iota_k: Lambda^l -> Lambda^{l-1}

    Matrix lblock(int l) const { return Scalar::i() * eps[l]; }
};

ModeComplex buildModeComplex(StructureKind kind, const Freq& freq);

struct DegreeRow {
    int degree = 0;
    long dimKer = 0;    // kernel of the outgoing block on Lambda^degree
    long dimImIn = 0;   // rank of the incoming block
    long dimH = 0;
};

struct CohomologyTable {
    Freq freq;
    std::vector<DegreeRow> rows;
    std::map<std::string, long> special;  // dims of named summand spaces
};

CohomologyTable modeCohomologyDims(const ModeComplex& mc);

/// Checks the splitting Lambda^l = ker(adjoint of incoming block) + image of
/// the incoming block, and that the adjoint block matches the conjugate
/// transpose of the operator block.
std::vector<CheckRecord> regularitySplit(const ModeComplex& mc, int l);

/// Per-mode reconstruction of the G2 cohomology table in degrees 2..5 from
/// independently constructed summand spaces, plus the vanishing statements
/// and bijections feeding into it. Requires freq != 0.
std::vector<CheckRecord> theoremTableG2(const Freq& freq,
                                        std::map<std::string, long>* special = nullptr);

/// Properties of the special 4-form attached to an exact 2-form beta2:
/// closedness, the two wedge identities, and orthogonality to the degree-4
/// summand it complements. beta2 must lie in the image of d.
std::vector<CheckRecord> specialSpaceV3(const Freq& freq, const TrigForm& beta2);

/// Per-mode reconstruction of the Spin7 cohomology table. Requires freq != 0.
std::vector<CheckRecord> theoremTableSpin7(const Freq& freq,
                                           std::map<std::string, long>* special = nullptr);

/// Hodge duality of the mode cohomology plus the closed-form descriptions of
/// the degree-0 and degree-1 kernels. Requires freq != 0.
std::vector<CheckRecord> dualityAndKernelChecks(const ModeComplex& mc);
std::vector<CheckRecord> dualityAndKernelChecks(StructureKind kind, const Freq& freq);

/// Structural invariants of a single mode: eps^2 = 0, rank-nullity sum rules
/// under the regularity split, and the kernel splittings along d- and
/// dstar-images together with the d-bijections between them.
std::vector<CheckRecord> modeInvariantChecks(const ModeComplex& mc);
std::vector<CheckRecord> modeInvariantChecks(StructureKind kind, const Freq& freq);

/// All +-e_u, all 0/+-1 vectors of support <= 2, plus `samples` seeded random
/// nonzero frequencies with |k|_inf <= maxNorm. Sorted, deduplicated, 0 excluded.
std::vector<Freq> defaultModeSweep(int n, long maxNorm, int samples, std::uint64_t seed);

}  // namespace fncoh
