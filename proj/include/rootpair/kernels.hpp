#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace rootpair {

// View into a zeta table: re/im arrays with m+1 slots where slot m holds 0.0,
// so a sentinel index contributes nothing when accumulated.
struct ZetaView {
    const double* re;
    const double* im;
    uint32_t m;
};

// Accumulation block size shared by every kernel: sums are formed per block
// and the block sums are folded pairwise, keeping results deterministic for a
// given kernel and the worst-case rounding error O(log n) ulps.
inline constexpr size_t kSumBlock = 1024;

// A kernel is a set of flat-array primitives over residues < 2^24 (so every
// intermediate product fits exactly in a double). Index arrays may carry the
// sentinel value m meaning "argument was 0 in F_p"; sentinel inputs always
// propagate to a zero contribution.
struct Kernel {
    std::string_view name;

    // out[i] = f(n0 + i) mod p by Horner; coeffs is dense, lowest degree
    // first; ncoeffs == 0 means the zero polynomial.
    void (*poly_eval)(const uint32_t* coeffs, size_t ncoeffs, uint32_t p,
                      uint32_t n0, uint32_t* out, size_t len);

    // out[i] = table[idx[i]]
    void (*gather_u32)(const uint32_t* table, const uint32_t* idx,
                       uint32_t* out, size_t len);

    // out[i] = (a*u[i] + v[i]) mod m, except that u[i] == m or v[i] == m
    // yields the sentinel m.
    void (*affine_map)(const uint32_t* u, const uint32_t* v, uint32_t a,
                       uint32_t m, uint32_t* out, size_t len);

    // Sum of flags[u[i]] & flags[w[i]] over 0/1 byte flags. flags must have
    // at least 4 readable bytes past the largest index (the field provides
    // that padding).
    uint64_t (*count_pairs)(const uint8_t* flags, const uint32_t* u,
                            const uint32_t* w, size_t len);

    // Sum over i of zeta^((a*x[i] + b*y[i]) mod m), where a sentinel in x or
    // y makes the term 0.
    std::complex<double> (*zeta_accum)(const uint32_t* x, const uint32_t* y,
                                       uint32_t a, uint32_t b, ZetaView zeta,
                                       size_t len);
};

const Kernel& scalar_kernel();
#ifdef ROOTPAIR_HAVE_AVX2
const Kernel& avx2_kernel();
#endif

// Kernel used by the library: the fastest one the CPU supports, unless the
// ROOTPAIR_KERNEL environment variable or force_kernel() picked one.
const Kernel& active_kernel();

// Selects a kernel by name ("scalar", "avx2"); returns false and leaves the
// selection unchanged if that kernel is not available in this build/CPU.
bool force_kernel(std::string_view name);

std::vector<std::string_view> available_kernels();

} // namespace rootpair
