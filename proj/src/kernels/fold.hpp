#pragma once

#include <complex>
#include <vector>

namespace rootpair::detail {

// Folds block sums pairwise in place. Both kernels use this on identical
// block boundaries, so cross-kernel differences come only from intra-block
// accumulation order.
inline std::complex<double> pairwise_fold(std::vector<std::complex<double>>& xs) {
    size_t n = xs.size();
    if (n == 0) {
        return {0.0, 0.0};
    }
    while (n > 1) {
        size_t h = 0;
        for (size_t i = 0; i + 1 < n; i += 2) {
            xs[h++] = xs[i] + xs[i + 1];
        }
        if (n & 1) {
            xs[h++] = xs[n - 1];
        }
        n = h;
    }
    return xs[0];
}

} // namespace rootpair::detail
