#include "lfic/image.hpp"

#include <cmath>
#include <limits>

#include "lfic/error.hpp"
#include "lfic/kernels.hpp"

namespace lfic {

namespace {

void check_dims(int h, int w, int k) {
  if (h <= 0 || w <= 0 || (k != 1 && k != 3))
    fail(Errc::invalid_argument, "bad image dimensions");
}

} // namespace

ImageU8 ImageU8::make(int h, int w, int k, uint8_t fill) {
  check_dims(h, w, k);
  ImageU8 img;
  img.height = h;
  img.width = w;
  img.channels = k;
  img.samples.assign(static_cast<size_t>(h) * w * k, fill);
  return img;
}

ImageF ImageF::make(int h, int w, int k, double fill) {
  check_dims(h, w, k);
  ImageF img;
  img.height = h;
  img.width = w;
  img.channels = k;
  img.samples.assign(static_cast<size_t>(h) * w * k, fill);
  return img;
}

ImageF ImageF::from_u8(const ImageU8& src) {
  ImageF img;
  img.height = src.height;
  img.width = src.width;
  img.channels = src.channels;
  img.samples.resize(src.samples.size());
  kernels::active().u8_to_f64(src.samples.data(), img.samples.data(),
                              src.samples.size());
  return img;
}

ImageU8 ImageF::to_u8() const {
  ImageU8 out;
  out.height = height;
  out.width = width;
  out.channels = channels;
  out.samples.resize(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    double v = samples[i];
    v = v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v);
    out.samples[i] = static_cast<uint8_t>(std::floor(v + 0.5));
  }
  return out;
}

double mse(const ImageU8& a, const ImageU8& b) {
  if (!a.same_shape(b)) fail(Errc::shape_mismatch, "mse operands differ in shape");
  const uint64_t sse = kernels::active().sse_u8(a.samples.data(), b.samples.data(),
                                                a.samples.size());
  return static_cast<double>(sse) / static_cast<double>(a.samples.size());
}

double psnr(const ImageU8& a, const ImageU8& b) {
  const double m = mse(a, b);
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / m);
}

} // namespace lfic
