#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "lfic/image.hpp"

namespace lfic {

// Fixed-topology embedding network standing in for a pretrained metric
// transformation: three 3x3 stride-2 zero-padded convolutions with widths
// 8/16/32, ReLU after each, then a global spatial mean per channel. Input is
// normalized from [0,255] to [0,1] internally. Everything runs in double
// precision and is bit-deterministic given a weights file.
//
// Weights file layout (magic "LFW1", little-endian):
//   u32 stage count (3), then per stage u32 inChannels, u32 outChannels,
//   then per stage: weights as f64 in [out][in][ky][kx] order, biases [out].
class EmbeddingNet {
public:
  static constexpr int kStageCount = 3;
  static constexpr int kEmbeddingDim = 32;
  static constexpr std::array<int, 3> kWidths{8, 16, 32};

  static EmbeddingNet load(std::span<const uint8_t> bytes);
  static EmbeddingNet load_file(const std::filesystem::path& path);
  // Seeded pseudo-random weights; identical on every platform.
  static EmbeddingNet fixture(int input_channels, uint64_t seed);
  // All-zero weights and biases (tests).
  static EmbeddingNet zero(int input_channels);

  std::vector<uint8_t> serialize() const;

  int input_channels() const { return stages_[0].in_ch; }

  std::array<double, kEmbeddingDim> forward(const ImageF& img) const;
  // Reverse-mode gradient of grad_emb . embedding(img) with respect to img;
  // recomputes the forward activations internally.
  ImageF backward(const ImageF& img,
                  std::span<const double, kEmbeddingDim> grad_emb) const;

private:
  struct Stage {
    int in_ch = 0;
    int out_ch = 0;
    std::vector<double> weights; // [out][in][ky][kx]
    std::vector<double> bias;    // [out]
    std::vector<double> wf;      // packed [ky][kx][in][out]
    std::vector<double> wb;      // packed [ky][kx][out][in]
  };

  struct Activations;

  void pack();
  Activations run_forward(const ImageF& img) const;

  std::array<Stage, kStageCount> stages_;
};

} // namespace lfic
