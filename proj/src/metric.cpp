#include "lfic/metric.hpp"

#include <cmath>

#include "lfic/error.hpp"
#include "lfic/kernels.hpp"

namespace lfic {

void LossWeights::validate() const {
  if (con < 0.0 || sem < 0.0 || adv < 0.0)
    fail(Errc::invalid_argument, "loss weights must be nonnegative");
}

LossResult con_loss(const ImageF& xhat, const ImageF& x) {
  if (!xhat.same_shape(x)) fail(Errc::shape_mismatch, "content loss shapes differ");
  const size_t n = xhat.samples.size();
  double sum = 0.0;
  for (size_t i = 0; i < n; ++i) sum += std::abs(xhat.samples[i] - x.samples[i]);
  LossResult r;
  r.loss = sum / static_cast<double>(n);
  r.grad = ImageF::make(xhat.height, xhat.width, xhat.channels);
  kernels::active().sign_scale(xhat.samples.data(), x.samples.data(),
                               r.grad.samples.data(), n, 1.0 / static_cast<double>(n));
  return r;
}

LossResult sem_loss(const ImageF& xhat, const ImageF& x, const EmbeddingNet& net) {
  if (!xhat.same_shape(x)) fail(Errc::shape_mismatch, "semantic loss shapes differ");
  const auto ea = net.forward(xhat);
  const auto eb = net.forward(x);
  std::array<double, EmbeddingNet::kEmbeddingDim> diff{};
  double loss = 0.0;
  for (int i = 0; i < EmbeddingNet::kEmbeddingDim; ++i) {
    diff[i] = ea[i] - eb[i];
    loss += diff[i] * diff[i];
  }
  for (auto& d : diff) d *= 2.0;
  LossResult r;
  r.loss = loss;
  r.grad = net.backward(xhat, diff);
  return r;
}

LossResult total_loss(const ImageF& xhat, const ImageF& x, const EmbeddingNet* net,
                      const LossWeights& w, const MetricPlugin* adv) {
  w.validate();
  LossResult total;
  total.grad = ImageF::make(xhat.height, xhat.width, xhat.channels);
  const auto& k = kernels::active();
  const size_t n = total.grad.samples.size();

  if (w.con != 0.0) {
    const LossResult con = con_loss(xhat, x);
    total.loss += w.con * con.loss;
    k.axpy(total.grad.samples.data(), con.grad.samples.data(), w.con, n);
  }
  if (w.sem != 0.0 && net != nullptr) {
    const LossResult sem = sem_loss(xhat, x, *net);
    total.loss += w.sem * sem.loss;
    k.axpy(total.grad.samples.data(), sem.grad.samples.data(), w.sem, n);
  }
  if (w.adv != 0.0 && adv != nullptr) {
    const LossResult a = adv->eval(xhat, x);
    total.loss += w.adv * a.loss;
    k.axpy(total.grad.samples.data(), a.grad.samples.data(), w.adv, n);
  }
  return total;
}

} // namespace lfic
