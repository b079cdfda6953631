#include "lfic/kernels.hpp"

#include <algorithm>
#include <cmath>

// Reference kernels. SIMD variants must match these bit for bit, so the
// floating-point operation order here is part of the contract: quantize is
// sub/mul/div/add/floor per element, dequantize is mul/div/add, and the
// convolutions accumulate taps in (ky, kx, channel) order with separate
// multiply and add.

namespace lfic::kernels {
namespace {

void u8_to_f64_scalar(const uint8_t* src, double* dst, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = static_cast<double>(src[i]);
}

void quantize_scalar(const double* x, int32_t* q, size_t n, double lo, double hi,
                     int levels) {
  const double num = static_cast<double>(levels - 1);
  const double den = hi - lo;
  const int qmax = levels - 1;
  for (size_t i = 0; i < n; ++i) {
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

void dequantize_scalar(const int32_t* q, double* v, size_t n, double lo, double hi,
                       int levels) {
  const double num = hi - lo;
  const double den = static_cast<double>(levels - 1);
  for (size_t i = 0; i < n; ++i) {
    v[i] = lo + static_cast<double>(q[i]) * num / den;
  }
}

uint64_t sse_u8_scalar(const uint8_t* a, const uint8_t* b, size_t n) {
  uint64_t acc = 0;
  for (size_t i = 0; i < n; ++i) {
    const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
    acc += static_cast<uint64_t>(d * d);
  }
  return acc;
}

void sign_scale_scalar(const double* a, const double* b, double* g, size_t n,
                       double scale) {
  for (size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    g[i] = d > 0.0 ? scale : (d < 0.0 ? -scale : 0.0);
  }
}

void axpy_scalar(double* dst, const double* src, double alpha, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    const double p = alpha * src[i];
    dst[i] = dst[i] + p;
  }
}

void relu_scalar(double* x, size_t n) {
  for (size_t i = 0; i < n; ++i) x[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_mask_scalar(const double* act, double* grad, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (!(act[i] > 0.0)) grad[i] = 0.0;
  }
}

void conv3x3s2_fwd_scalar(const double* in, int h, int w, int ci, const double* wf,
                          const double* bias, double* out, int oh, int ow, int co) {
  for (int oy = 0; oy < oh; ++oy) {
    for (int ox = 0; ox < ow; ++ox) {
      double* o = out + (static_cast<size_t>(oy) * ow + ox) * co;
      for (int c = 0; c < co; ++c) o[c] = bias[c];
      for (int ky = 0; ky < 3; ++ky) {
        const int iy = 2 * oy + ky - 1;
        if (iy < 0 || iy >= h) continue;
        for (int kx = 0; kx < 3; ++kx) {
          const int ix = 2 * ox + kx - 1;
          if (ix < 0 || ix >= w) continue;
          const double* p = in + (static_cast<size_t>(iy) * w + ix) * ci;
          const double* wk = wf + (static_cast<size_t>(ky) * 3 + kx) * ci * co;
          for (int c = 0; c < ci; ++c) {
            const double a = p[c];
            const double* ws = wk + static_cast<size_t>(c) * co;
            for (int oc = 0; oc < co; ++oc) {
              const double m = a * ws[oc];
              o[oc] = o[oc] + m;
            }
          }
        }
      }
    }
  }
}

void conv3x3s2_bwd_scalar(const double* dout, int oh, int ow, int co,
                          const double* wb, double* din, int h, int w, int ci) {
  for (int iy = 0; iy < h; ++iy) {
    for (int ix = 0; ix < w; ++ix) {
      double* d = din + (static_cast<size_t>(iy) * w + ix) * ci;
      for (int c = 0; c < ci; ++c) d[c] = 0.0;
      for (int ky = 0; ky < 3; ++ky) {
        // iy = 2*oy + ky - 1  =>  oy = (iy + 1 - ky)/2, must be integral
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
            const double a = g[oc];
            const double* ws = wk + static_cast<size_t>(oc) * ci;
            for (int c = 0; c < ci; ++c) {
              const double m = a * ws[c];
              d[c] = d[c] + m;
            }
          }
        }
      }
    }
  }
}

} // namespace

const Table& scalar_table() {
  static const Table t{
      "scalar",          u8_to_f64_scalar, quantize_scalar,
      dequantize_scalar, sse_u8_scalar,    sign_scale_scalar,
      axpy_scalar,       relu_scalar,      relu_mask_scalar,
      conv3x3s2_fwd_scalar, conv3x3s2_bwd_scalar,
  };
  return t;
}

} // namespace lfic::kernels
