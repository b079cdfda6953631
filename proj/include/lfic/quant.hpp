#pragma once

#include <cstdint>
#include <vector>

#include "lfic/image.hpp"

namespace lfic {

// Uniform scalar quantizer, endpoint-inclusive: reconstruction levels are
// lo + q*(hi-lo)/(levels-1), so lo and hi are exactly representable.
struct QuantSpec {
  int levels = 8;
  double lo = 0.0;
  double hi = 255.0;

  void validate() const; // levels >= 2, lo < hi
  double step() const { return (hi - lo) / (levels - 1); }
};

// Quantized sample plane, same shape conventions as ImageF.
struct IndexPlane {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<int32_t> values;

  size_t index(int y, int x, int c) const {
    return (static_cast<size_t>(y) * width + x) * channels + c;
  }
  int32_t& at(int y, int x, int c) { return values[index(y, x, c)]; }
  int32_t at(int y, int x, int c) const { return values[index(y, x, c)]; }
  bool operator==(const IndexPlane&) const = default;
};

// Clamp to [lo,hi], then q = round((x-lo)*(L-1)/(hi-lo)) with ties away
// from zero.
IndexPlane quantize(const ImageF& x, const QuantSpec& spec);

// v = lo + q*(hi-lo)/(L-1); rejects indices outside [0, L-1].
ImageF dequantize(const IndexPlane& q, const QuantSpec& spec);

// Straight-through rule: rounding backpropagates as identity, except that
// samples clamped at the range boundary carry no sensitivity.
ImageF straight_through_backward(const ImageF& grad_out, const ImageF& pre_quant,
                                 const QuantSpec& spec);

} // namespace lfic
