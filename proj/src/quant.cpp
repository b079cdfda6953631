#include "lfic/quant.hpp"

#include <cmath>

#include "lfic/error.hpp"
#include "lfic/kernels.hpp"

namespace lfic {

void QuantSpec::validate() const {
  if (levels < 2) fail(Errc::invalid_argument, "quantizer needs at least 2 levels");
  if (!(lo < hi)) fail(Errc::invalid_argument, "quantizer range is empty");
  if (!std::isfinite(lo) || !std::isfinite(hi))
    fail(Errc::invalid_argument, "quantizer range must be finite");
}

IndexPlane quantize(const ImageF& x, const QuantSpec& spec) {
  spec.validate();
  IndexPlane q;
  q.height = x.height;
  q.width = x.width;
  q.channels = x.channels;
  q.values.resize(x.samples.size());
  kernels::active().quantize(x.samples.data(), q.values.data(), x.samples.size(),
                             spec.lo, spec.hi, spec.levels);
  return q;
}

ImageF dequantize(const IndexPlane& q, const QuantSpec& spec) {
  spec.validate();
  for (const int32_t v : q.values)
    if (v < 0 || v >= spec.levels)
      fail(Errc::out_of_range, "quantizer index outside [0, levels-1]");
  ImageF x;
  x.height = q.height;
  x.width = q.width;
  x.channels = q.channels;
  x.samples.resize(q.values.size());
  kernels::active().dequantize(q.values.data(), x.samples.data(), q.values.size(),
                               spec.lo, spec.hi, spec.levels);
  return x;
}

ImageF straight_through_backward(const ImageF& grad_out, const ImageF& pre_quant,
                                 const QuantSpec& spec) {
  spec.validate();
  if (!grad_out.same_shape(pre_quant))
    fail(Errc::shape_mismatch, "gradient and pre-quantization shapes differ");
  ImageF g = grad_out;
  for (size_t i = 0; i < g.samples.size(); ++i) {
    const double v = pre_quant.samples[i];
    if (v < spec.lo || v > spec.hi) g.samples[i] = 0.0;
  }
  return g;
}

} // namespace lfic
