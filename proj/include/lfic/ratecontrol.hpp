#pragma once

#include <string>
#include <vector>

#include "lfic/codec.hpp"
#include "lfic/metric.hpp"

namespace lfic {

struct Budget {
  double target_bpp = 0.2;

  void validate() const; // > 0
};

struct RefineConfig {
  int max_loops = 32;
  // fraction of still-refinable superblocks split per loop; ceil() of the
  // product, so any positive value refines at least one cell
  double refine_fraction = 0.05;

  void validate() const;
};

enum class Termination { budget_reached, max_loops, fully_refined, initial_overshoot };

const char* termination_name(Termination t);

struct LoopStats {
  double bpp = 0.0;
  double loss = 0.0;
  uint64_t tile_count = 0;
};

struct EncodeReport {
  double achieved_bpp = 0.0;
  double mask_overhead = 0.0; // maskBytes / (maskBytes + residualBytes)
  int loops_used = 0;         // refine steps kept in the emitted stream
  Termination termination = Termination::fully_refined;
  std::vector<LoopStats> trace; // one entry per attempted encode
  double psnr_mosaic = 0.0;     // original vs decoded mosaic, +inf when exact
};

struct EncodeOutcome {
  EncodedImage encoded;
  EncodeReport report;
};

// Coarsest-possible mask: every superblock at the maximum block size.
MaskGrid init_mask(int padded_height, int padded_width, int n_max);

// Reconstruct through the mask (pool, assemble, quantize, dequantize), take
// the total-loss gradient at the reconstruction, route it through the
// straight-through rule, and sum absolute entries per superblock.
std::vector<double> superblock_scores(const ImageF& padded, const MaskGrid& mask,
                                      const QuantSpec& spec, const EmbeddingNet* net,
                                      const LossWeights& w);

// Lower the top ceil(refine_fraction * refinableCount) refinable cells by
// score to the next smaller block size. Ties break toward raster order.
// Throws when no cell is refinable.
void refine_step(MaskGrid& mask, std::span<const double> scores,
                 const RefineConfig& cfg);

// Budget-driven mask refinement: start from the coarsest mask and re-encode
// after every refinement (real bitstream, not an estimate). The first encode
// exceeding the budget is rolled back and the previous stream is emitted;
// when even the coarsest encode overshoots, that stream is emitted and the
// report says so.
EncodeOutcome encode_with_budget(const ImageU8& img, const Budget& budget,
                                 const RefineConfig& cfg, const QuantSpec& spec,
                                 const EmbeddingNet* net, const LossWeights& w);

std::string report_text(const EncodeReport& report, const std::string& file,
                        double target_bpp);
std::string report_csv_row(const EncodeReport& report, const std::string& file);

} // namespace lfic
