#ifdef ROOTPAIR_HAVE_AVX2

#include <immintrin.h>

#include <algorithm>
#include <cstring>

#include "fold.hpp"
#include "rootpair/kernels.hpp"

// All residues and exponents are < 2^24 (fields are capped at p <= 10^7), so
// a*x + b*y < 2^49 and every intermediate here is an integer represented
// exactly in a double; only the final accumulation of roots of unity rounds.

namespace rootpair {

namespace {

// t mod m for exact integral doubles t in [0, 2^52). floor(t/m) computed via
// the rounded reciprocal can be off by one, hence the two-sided correction.
inline __m256d mod_reduce(__m256d t, __m256d vm, __m256d vinv) {
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
    __m256d r = _mm256_sub_pd(t, _mm256_mul_pd(q, vm));
    __m256d lt0 = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
    r = _mm256_blendv_pd(r, _mm256_add_pd(r, vm), lt0);
    __m256d gem = _mm256_cmp_pd(r, vm, _CMP_GE_OQ);
    return _mm256_blendv_pd(r, _mm256_sub_pd(r, vm), gem);
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void poly_eval_avx2(const uint32_t* coeffs, size_t ncoeffs, uint32_t p,
                    uint32_t n0, uint32_t* out, size_t len) {
    if (ncoeffs == 0) {
        std::memset(out, 0, len * sizeof(uint32_t));
        return;
    }
    std::vector<double> cd(ncoeffs);
    for (size_t j = 0; j < ncoeffs; ++j) {
        cd[j] = static_cast<double>(coeffs[j]);
    }
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / p);
    const __m128i step = _mm_setr_epi32(0, 1, 2, 3);
    size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m128i xi = _mm_add_epi32(_mm_set1_epi32(static_cast<int>(n0 + i)), step);
        __m256d x = _mm256_cvtepi32_pd(xi);
        __m256d acc = _mm256_set1_pd(cd[ncoeffs - 1]);
        for (size_t j = ncoeffs - 1; j-- > 0;) {
            __m256d t = _mm256_add_pd(_mm256_mul_pd(acc, x), _mm256_set1_pd(cd[j]));
            acc = mod_reduce(t, vp, vinv);
        }
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i),
                         _mm256_cvttpd_epi32(acc));
    }
    for (; i < len; ++i) {
        const uint64_t x = n0 + i;
        uint64_t acc = coeffs[ncoeffs - 1];
        for (size_t j = ncoeffs - 1; j-- > 0;) {
            acc = (acc * x + coeffs[j]) % p;
        }
        out[i] = static_cast<uint32_t>(acc);
    }
}

void gather_u32_avx2(const uint32_t* table, const uint32_t* idx, uint32_t* out,
                     size_t len) {
    size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
        __m256i g = _mm256_i32gather_epi32(reinterpret_cast<const int*>(table), vi, 4);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), g);
    }
    for (; i < len; ++i) {
        out[i] = table[idx[i]];
    }
}

void affine_map_avx2(const uint32_t* u, const uint32_t* v, uint32_t a,
                     uint32_t m, uint32_t* out, size_t len) {
    const __m256d vm = _mm256_set1_pd(static_cast<double>(m));
    const __m256d vinv = _mm256_set1_pd(1.0 / m);
    const __m256d va = _mm256_set1_pd(static_cast<double>(a));
    const __m128i vms = _mm_set1_epi32(static_cast<int>(m));
    size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m128i ui = _mm_loadu_si128(reinterpret_cast<const __m128i*>(u + i));
        __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v + i));
        __m256d t = _mm256_add_pd(
            _mm256_mul_pd(va, _mm256_cvtepi32_pd(ui)), _mm256_cvtepi32_pd(vi));
        __m128i ri = _mm256_cvttpd_epi32(mod_reduce(t, vm, vinv));
        __m128i sentinel = _mm_or_si128(_mm_cmpeq_epi32(ui, vms),
                                        _mm_cmpeq_epi32(vi, vms));
        ri = _mm_blendv_epi8(ri, vms, sentinel);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), ri);
    }
    for (; i < len; ++i) {
        if (u[i] == m || v[i] == m) {
            out[i] = m;
        } else {
            out[i] = static_cast<uint32_t>(
                (static_cast<uint64_t>(a) * u[i] + v[i]) % m);
        }
    }
}

uint64_t count_pairs_avx2(const uint8_t* flags, const uint32_t* u,
                          const uint32_t* w, size_t len) {
    const __m256i one = _mm256_set1_epi32(1);
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i ui = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(u + i));
        __m256i wi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        // scale-1 gathers read 4 bytes at flags+idx; only bit 0 of the low
        // byte matters, the table guarantees the 3 padding bytes exist.
        __m256i gu = _mm256_i32gather_epi32(reinterpret_cast<const int*>(flags), ui, 1);
        __m256i gw = _mm256_i32gather_epi32(reinterpret_cast<const int*>(flags), wi, 1);
        acc = _mm256_add_epi32(acc, _mm256_and_si256(_mm256_and_si256(gu, gw), one));
    }
    uint32_t lanes[8];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t count = 0;
    for (uint32_t lane : lanes) {
        count += lane;
    }
    for (; i < len; ++i) {
        count += flags[u[i]] & flags[w[i]];
    }
    return count;
}

std::complex<double> zeta_accum_avx2(const uint32_t* x, const uint32_t* y,
                                     uint32_t a, uint32_t b, ZetaView zeta,
                                     size_t len) {
    const uint64_t m = zeta.m;
    const __m256d vm = _mm256_set1_pd(static_cast<double>(m));
    const __m256d vinv = _mm256_set1_pd(1.0 / m);
    const __m256d va = _mm256_set1_pd(static_cast<double>(a));
    const __m256d vb = _mm256_set1_pd(static_cast<double>(b));
    const __m128i vms = _mm_set1_epi32(static_cast<int>(m));
    std::vector<std::complex<double>> blocks;
    blocks.reserve(len / kSumBlock + 1);
    for (size_t base = 0; base < len; base += kSumBlock) {
        const size_t end = std::min(base + kSumBlock, len);
        __m256d acc_re = _mm256_setzero_pd();
        __m256d acc_im = _mm256_setzero_pd();
        size_t i = base;
        for (; i + 4 <= end; i += 4) {
            __m128i xi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
            __m128i yi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i));
            __m256d t = _mm256_add_pd(
                _mm256_mul_pd(va, _mm256_cvtepi32_pd(xi)),
                _mm256_mul_pd(vb, _mm256_cvtepi32_pd(yi)));
            __m128i ei = _mm256_cvttpd_epi32(mod_reduce(t, vm, vinv));
            __m128i sentinel = _mm_or_si128(_mm_cmpeq_epi32(xi, vms),
                                            _mm_cmpeq_epi32(yi, vms));
            ei = _mm_blendv_epi8(ei, vms, sentinel);
            acc_re = _mm256_add_pd(acc_re, _mm256_i32gather_pd(zeta.re, ei, 8));
            acc_im = _mm256_add_pd(acc_im, _mm256_i32gather_pd(zeta.im, ei, 8));
        }
        double re = hsum(acc_re);
        double im = hsum(acc_im);
        for (; i < end; ++i) {
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

const Kernel& avx2_kernel() {
    static const Kernel k{
        "avx2",          poly_eval_avx2,   gather_u32_avx2,
        affine_map_avx2, count_pairs_avx2, zeta_accum_avx2,
    };
    return k;
}

} // namespace rootpair

#endif // ROOTPAIR_HAVE_AVX2
