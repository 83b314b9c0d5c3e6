#pragma once

#include "fncoh/form.hpp"

#include <cstdint>
#include <vector>

namespace fncoh {

/// splitmix64 stream; deterministic and platform-independent so that reports
/// generated from the same seed are byte-identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive.
    long intIn(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Gaussian integer with parts in [-3, 3].
    Scalar scalarIn3(bool allowImaginary = true) {
        long re = intIn(-3, 3);
        long im = allowImaginary ? intIn(-3, 3) : 0;
        return Scalar(mpq_class(re), mpq_class(im));
    }

    Form form(int dim, int degree, int terms = 4, bool allowImaginary = true) {
        auto masks = basisMasks(dim, degree);
        Form f(dim, degree);
        for (int t = 0; t < terms; ++t)
            f.add(masks[static_cast<std::size_t>(intIn(0, static_cast<long>(masks.size()) - 1))],
                  scalarIn3(allowImaginary));
        return f;
    }

    Vec vec(int dim, bool allowImaginary = true) {
        Vec v(dim);
        for (int j = 0; j < dim; ++j) v[j] = scalarIn3(allowImaginary);
        return v;
    }

    /// Integer frequency vector with |k|_inf <= maxAbs.
    std::vector<long> freq(int dim, long maxAbs) {
        std::vector<long> k(dim);
        for (int j = 0; j < dim; ++j) k[j] = intIn(-maxAbs, maxAbs);
        return k;
    }

    /// Nonzero frequency vector.
    std::vector<long> freqNonzero(int dim, long maxAbs) {
        for (;;) {
            auto k = freq(dim, maxAbs);
            for (long c : k)
                if (c != 0) return k;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace fncoh
