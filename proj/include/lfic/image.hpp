#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lfic {

// Row-major, channel-interleaved raster. channels is 1 (gray) or 3 (RGB).
struct ImageU8 {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<uint8_t> samples;

  static ImageU8 make(int h, int w, int k, uint8_t fill = 0);

  size_t count() const { return samples.size(); }
  size_t index(int y, int x, int c) const {
    return (static_cast<size_t>(y) * width + x) * channels + c;
  }
  uint8_t& at(int y, int x, int c) { return samples[index(y, x, c)]; }
  uint8_t at(int y, int x, int c) const { return samples[index(y, x, c)]; }
  bool same_shape(const ImageU8& o) const {
    return height == o.height && width == o.width && channels == o.channels;
  }
  bool operator==(const ImageU8&) const = default;
};

// Same layout with double samples.
struct ImageF {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<double> samples;

  static ImageF make(int h, int w, int k, double fill = 0.0);
  static ImageF from_u8(const ImageU8& img);

  // clamp to [0,255], round half away from zero
  ImageU8 to_u8() const;

  size_t count() const { return samples.size(); }
  size_t index(int y, int x, int c) const {
    return (static_cast<size_t>(y) * width + x) * channels + c;
  }
  double& at(int y, int x, int c) { return samples[index(y, x, c)]; }
  double at(int y, int x, int c) const { return samples[index(y, x, c)]; }
  bool same_shape(const ImageF& o) const {
    return height == o.height && width == o.width && channels == o.channels;
  }
};

// Mean squared error over all samples; throws on shape mismatch.
double mse(const ImageU8& a, const ImageU8& b);

// 10*log10(255^2/MSE); +infinity when the images are identical.
double psnr(const ImageU8& a, const ImageU8& b);

} // namespace lfic
