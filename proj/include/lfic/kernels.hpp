#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace lfic::kernels {

// Data-parallel inner loops behind the codec. Each entry has a scalar
// reference implementation and may have SIMD variants; the variants are
// required to produce bit-identical output to the reference (same IEEE
// operations in the same per-element order), which the equivalence tests
// assert with exact comparisons.
//
// Convolution kernels are fixed 3x3, stride 2, zero padding 1. Weights are
// pre-packed with the vectorized channel innermost:
//   forward:  wf[ky][kx][ci][co]   (co contiguous)
//   backward: wb[ky][kx][co][ci]   (ci contiguous)
// The accumulation order per output element is (ky, kx, c) in both paths.
struct Table {
  const char* name;

  void (*u8_to_f64)(const uint8_t* src, double* dst, size_t n);
  // q = clamp to [0,levels-1] of floor((clamp(x,lo,hi)-lo)*(levels-1)/(hi-lo) + 0.5)
  void (*quantize)(const double* x, int32_t* q, size_t n, double lo, double hi,
                   int levels);
  // v = lo + (q*(hi-lo))/(levels-1)
  void (*dequantize)(const int32_t* q, double* v, size_t n, double lo, double hi,
                     int levels);
  uint64_t (*sse_u8)(const uint8_t* a, const uint8_t* b, size_t n);
  // g = scale*sign(a-b), sign(0) = 0
  void (*sign_scale)(const double* a, const double* b, double* g, size_t n,
                     double scale);
  // dst += alpha*src (mul then add; no fma)
  void (*axpy)(double* dst, const double* src, double alpha, size_t n);
  void (*relu)(double* x, size_t n);
  // grad[i] = act[i] > 0 ? grad[i] : 0
  void (*relu_mask)(const double* act, double* grad, size_t n);
  void (*conv3x3s2_fwd)(const double* in, int h, int w, int ci, const double* wf,
                        const double* bias, double* out, int oh, int ow, int co);
  void (*conv3x3s2_bwd)(const double* dout, int oh, int ow, int co,
                        const double* wb, double* din, int h, int w, int ci);
};

enum class Isa { scalar, avx2 };

bool available(Isa isa);
const Table& table(Isa isa);   // throws invalid_argument if unavailable
Isa detect();                  // best ISA supported by this CPU

// Process-wide selection. Defaults to detect(); honours the LFIC_KERNELS
// environment variable ("scalar", "avx2", "auto") on first use.
const Table& active();
void select(Isa isa);
std::optional<Isa> parse_isa(std::string_view s); // "scalar"|"avx2"|"auto"->detect

} // namespace lfic::kernels
