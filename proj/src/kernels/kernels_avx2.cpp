// AVX2 variants. Vectorization is across the channel dimension (forward:
// output channels, backward: input channels) so every element sees the same
// operation sequence as the scalar reference and results match bit for bit.

#if defined(__x86_64__) || defined(__i386__)

#include "lfic/kernels.hpp"

#include <cmath>
#include <cstring>
#include <immintrin.h>

namespace lfic::kernels {
namespace {

void u8_to_f64_avx2(const uint8_t* src, double* dst, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    int32_t bits;
    std::memcpy(&bits, src + i, 4);
    const __m128i b = _mm_cvtsi32_si128(bits);
    const __m128i w = _mm_cvtepu8_epi32(b);
    _mm256_storeu_pd(dst + i, _mm256_cvtepi32_pd(w));
  }
  for (; i < n; ++i) dst[i] = static_cast<double>(src[i]);
}

void quantize_avx2(const double* x, int32_t* q, size_t n, double lo, double hi,
                   int levels) {
  const double num = static_cast<double>(levels - 1);
  const double den = hi - lo;
  const int qmax = levels - 1;
  const __m256d vlo = _mm256_set1_pd(lo);
  const __m256d vhi = _mm256_set1_pd(hi);
  const __m256d vnum = _mm256_set1_pd(num);
  const __m256d vden = _mm256_set1_pd(den);
  const __m256d vhalf = _mm256_set1_pd(0.5);
  const __m128i vzero = _mm_setzero_si128();
  const __m128i vqmax = _mm_set1_epi32(qmax);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    v = _mm256_max_pd(v, vlo);
    v = _mm256_min_pd(v, vhi);
    __m256d scaled = _mm256_div_pd(_mm256_mul_pd(_mm256_sub_pd(v, vlo), vnum), vden);
    scaled = _mm256_floor_pd(_mm256_add_pd(scaled, vhalf));
    __m128i k = _mm256_cvttpd_epi32(scaled);
    k = _mm_max_epi32(k, vzero);
    k = _mm_min_epi32(k, vqmax);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(q + i), k);
  }
  for (; i < n; ++i) {
    double v = x[i];
    v = v < lo ? lo : v;
    v = v > hi ? hi : v;
    const double scaled = (v - lo) * num / den;
    int32_t k = static_cast<int32_t>(std::floor(scaled + 0.5));
    k = k < 0 ? 0 : k;
    k = k > qmax ? qmax : k;
    q[i] = k;
  }
}

void dequantize_avx2(const int32_t* q, double* v, size_t n, double lo, double hi,
                     int levels) {
  const double num = hi - lo;
  const double den = static_cast<double>(levels - 1);
  const __m256d vlo = _mm256_set1_pd(lo);
  const __m256d vnum = _mm256_set1_pd(num);
  const __m256d vden = _mm256_set1_pd(den);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i k = _mm_loadu_si128(reinterpret_cast<const __m128i*>(q + i));
    const __m256d d = _mm256_cvtepi32_pd(k);
    _mm256_storeu_pd(v + i,
                     _mm256_add_pd(vlo, _mm256_div_pd(_mm256_mul_pd(d, vnum), vden)));
  }
  for (; i < n; ++i) v[i] = lo + static_cast<double>(q[i]) * num / den;
}

uint64_t sse_u8_avx2(const uint8_t* a, const uint8_t* b, size_t n) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m128i ra = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i));
    const __m128i rb = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i));
    const __m256i wa = _mm256_cvtepu8_epi16(ra);
    const __m256i wb16 = _mm256_cvtepu8_epi16(rb);
    const __m256i d = _mm256_sub_epi16(wa, wb16);
    const __m256i m = _mm256_madd_epi16(d, d); // 8 x i32, each <= 2*255^2
    acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(m)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(m, 1)));
  }
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
    sum += static_cast<uint64_t>(d * d);
  }
  return sum;
}

void sign_scale_avx2(const double* a, const double* b, double* g, size_t n,
                     double scale) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d pos = _mm256_set1_pd(scale);
  const __m256d neg = _mm256_set1_pd(-scale);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    const __m256d gt = _mm256_cmp_pd(d, zero, _CMP_GT_OQ);
    const __m256d lt = _mm256_cmp_pd(d, zero, _CMP_LT_OQ);
    _mm256_storeu_pd(g + i, _mm256_or_pd(_mm256_and_pd(gt, pos), _mm256_and_pd(lt, neg)));
  }
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    g[i] = d > 0.0 ? scale : (d < 0.0 ? -scale : 0.0);
  }
}

void axpy_avx2(double* dst, const double* src, double alpha, size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(src + i));
    _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(dst + i), p));
  }
  for (; i < n; ++i) {
    const double p = alpha * src[i];
    dst[i] = dst[i] + p;
  }
}

void relu_avx2(double* x, size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
  }
  for (; i < n; ++i) x[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_mask_avx2(const double* act, double* grad, size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d m = _mm256_cmp_pd(_mm256_loadu_pd(act + i), zero, _CMP_GT_OQ);
    _mm256_storeu_pd(grad + i, _mm256_and_pd(_mm256_loadu_pd(grad + i), m));
  }
  for (; i < n; ++i) {
    if (!(act[i] > 0.0)) grad[i] = 0.0;
  }
}

// acc[c] over a channel strip: vector blocks of 4 plus a scalar tail. Both
// follow the reference tap order, so each channel's add sequence is the same.
inline void tap_accumulate(double* o, const double* ws, double a, int nc) {
  const __m256d va = _mm256_set1_pd(a);
  int c = 0;
  for (; c + 4 <= nc; c += 4) {
    const __m256d w = _mm256_loadu_pd(ws + c);
    const __m256d cur = _mm256_loadu_pd(o + c);
    _mm256_storeu_pd(o + c, _mm256_add_pd(cur, _mm256_mul_pd(va, w)));
  }
  for (; c < nc; ++c) {
    const double m = a * ws[c];
    o[c] = o[c] + m;
  }
}

void conv3x3s2_fwd_avx2(const double* in, int h, int w, int ci, const double* wf,
                        const double* bias, double* out, int oh, int ow, int co) {
  for (int oy = 0; oy < oh; ++oy) {
    for (int ox = 0; ox < ow; ++ox) {
      double* o = out + (static_cast<size_t>(oy) * ow + ox) * co;
      std::memcpy(o, bias, sizeof(double) * co);
      for (int ky = 0; ky < 3; ++ky) {
        const int iy = 2 * oy + ky - 1;
        if (iy < 0 || iy >= h) continue;
        for (int kx = 0; kx < 3; ++kx) {
          const int ix = 2 * ox + kx - 1;
          if (ix < 0 || ix >= w) continue;
          const double* p = in + (static_cast<size_t>(iy) * w + ix) * ci;
          const double* wk = wf + (static_cast<size_t>(ky) * 3 + kx) * ci * co;
          for (int c = 0; c < ci; ++c) {
            tap_accumulate(o, wk + static_cast<size_t>(c) * co, p[c], co);
          }
        }
      }
    }
  }
}

void conv3x3s2_bwd_avx2(const double* dout, int oh, int ow, int co,
                        const double* wb, double* din, int h, int w, int ci) {
  for (int iy = 0; iy < h; ++iy) {
    for (int ix = 0; ix < w; ++ix) {
      double* d = din + (static_cast<size_t>(iy) * w + ix) * ci;
      std::memset(d, 0, sizeof(double) * ci);
      for (int ky = 0; ky < 3; ++ky) {
        const int ny = iy + 1 - ky;
        if (ny < 0 || (ny & 1)) continue;
        const int oy = ny >> 1;
        if (oy >= oh) continue;
        for (int kx = 0; kx < 3; ++kx) {
          const int nx = ix + 1 - kx;
          if (nx < 0 || (nx & 1)) continue;
          const int ox = nx >> 1;
          if (ox >= ow) continue;
          const double* g = dout + (static_cast<size_t>(oy) * ow + ox) * co;
          const double* wk = wb + (static_cast<size_t>(ky) * 3 + kx) * co * ci;
          for (int oc = 0; oc < co; ++oc) {
            tap_accumulate(d, wk + static_cast<size_t>(oc) * ci, g[oc], ci);
          }
        }
      }
    }
  }
}

} // namespace

const Table& avx2_table() {
  static const Table t{
      "avx2",          u8_to_f64_avx2, quantize_avx2,
      dequantize_avx2, sse_u8_avx2,    sign_scale_avx2,
      axpy_avx2,       relu_avx2,      relu_mask_avx2,
      conv3x3s2_fwd_avx2, conv3x3s2_bwd_avx2,
  };
  return t;
}

} // namespace lfic::kernels

#endif // x86
