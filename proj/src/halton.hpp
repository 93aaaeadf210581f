#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace crnkit {

inline const int kHaltonPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                    31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                    73, 79, 83, 89, 97, 101, 103, 107, 109, 113};

// Radical-inverse of index in the given base; index is 1-based so the first
// point is never the origin.
inline double halton_value(unsigned long index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

// dim-dimensional Halton point scaled to [lo, hi] per coordinate.
inline std::vector<double> halton_point(unsigned long index, std::size_t dim,
                                        double lo, double hi) {
    if (dim > sizeof(kHaltonPrimes) / sizeof(kHaltonPrimes[0]))
        throw std::invalid_argument("halton dimension too large");
    std::vector<double> p(dim);
    for (std::size_t d = 0; d < dim; ++d)
        p[d] = lo + (hi - lo) * halton_value(index, kHaltonPrimes[d]);
    return p;
}

}  // namespace crnkit
