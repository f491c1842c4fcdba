#include "rootpair/kernels.hpp"

#include <algorithm>
#include <cstring>

#include "fold.hpp"

namespace rootpair {

namespace {

void poly_eval_scalar(const uint32_t* coeffs, size_t ncoeffs, uint32_t p,
                      uint32_t n0, uint32_t* out, size_t len) {
    if (ncoeffs == 0) {
        std::memset(out, 0, len * sizeof(uint32_t));
        return;
    }
    for (size_t i = 0; i < len; ++i) {
        const uint64_t x = n0 + i;
        uint64_t acc = coeffs[ncoeffs - 1];
        for (size_t j = ncoeffs - 1; j-- > 0;) {
            acc = (acc * x + coeffs[j]) % p;
        }
        out[i] = static_cast<uint32_t>(acc);
    }
}

void gather_u32_scalar(const uint32_t* table, const uint32_t* idx,
                       uint32_t* out, size_t len) {
    for (size_t i = 0; i < len; ++i) {
        out[i] = table[idx[i]];
    }
}

void affine_map_scalar(const uint32_t* u, const uint32_t* v, uint32_t a,
                       uint32_t m, uint32_t* out, size_t len) {
    for (size_t i = 0; i < len; ++i) {
        if (u[i] == m || v[i] == m) {
            out[i] = m;
        } else {
            out[i] = static_cast<uint32_t>(
                (static_cast<uint64_t>(a) * u[i] + v[i]) % m);
        }
    }
}

uint64_t count_pairs_scalar(const uint8_t* flags, const uint32_t* u,
                            const uint32_t* w, size_t len) {
    uint64_t count = 0;
    for (size_t i = 0; i < len; ++i) {
        count += flags[u[i]] & flags[w[i]];
    }
    return count;
}

std::complex<double> zeta_accum_scalar(const uint32_t* x, const uint32_t* y,
                                       uint32_t a, uint32_t b, ZetaView zeta,
                                       size_t len) {
    const uint64_t m = zeta.m;
    std::vector<std::complex<double>> blocks;
    blocks.reserve(len / kSumBlock + 1);
    for (size_t base = 0; base < len; base += kSumBlock) {
        const size_t end = std::min(base + kSumBlock, len);
        double re = 0.0, im = 0.0;
        for (size_t i = base; i < end; ++i) {
            uint64_t e;
            if (x[i] == m || y[i] == m) {
                e = m;
            } else {
                e = (static_cast<uint64_t>(a) * x[i] +
                     static_cast<uint64_t>(b) * y[i]) % m;
            }
            re += zeta.re[e];
            im += zeta.im[e];
        }
        blocks.emplace_back(re, im);
    }
    return detail::pairwise_fold(blocks);
}

} // namespace

const Kernel& scalar_kernel() {
    static const Kernel k{
        "scalar",         poly_eval_scalar,   gather_u32_scalar,
        affine_map_scalar, count_pairs_scalar, zeta_accum_scalar,
    };
    return k;
}

} // namespace rootpair
