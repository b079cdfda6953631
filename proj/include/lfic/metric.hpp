#pragma once

#include <memory>

#include "lfic/embed.hpp"
#include "lfic/image.hpp"

namespace lfic {

struct LossResult {
  double loss = 0.0;
  ImageF grad; // d loss / d xhat
};

// Differentiable distortion plug-in; the adversarial slot of the total loss
// accepts any implementation.
class MetricPlugin {
public:
  virtual ~MetricPlugin() = default;
  virtual LossResult eval(const ImageF& xhat, const ImageF& x) const = 0;
};

struct LossWeights {
  double con = 0.01;
  double sem = 10.0;
  double adv = 0.0; // no discriminator ships with the codec; 0.1 when one does

  void validate() const;
};

// Mean absolute difference; gradient is sign(xhat-x)/sampleCount, sign(0)=0.
LossResult con_loss(const ImageF& xhat, const ImageF& x);

// Squared L2 distance between embeddings; gradient flows through the
// network's reverse pass with grad_emb = 2*(H(xhat)-H(x)).
LossResult sem_loss(const ImageF& xhat, const ImageF& x, const EmbeddingNet& net);

// w.con*con + w.sem*sem + w.adv*adv with the matching gradient superposition.
// The semantic term is skipped when net is null, the adversarial term when
// adv is null.
LossResult total_loss(const ImageF& xhat, const ImageF& x, const EmbeddingNet* net,
                      const LossWeights& w, const MetricPlugin* adv = nullptr);

} // namespace lfic
