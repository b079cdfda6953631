#include "lfic/dpcm.hpp"

namespace lfic {

// element (i,j) lives at data[(i*width + j)*stride]

void predict_forward_plane(const int32_t* q, int height, int width, int stride,
                           int32_t* e) {
  auto idx = [&](int i, int j) { return (static_cast<size_t>(i) * width + j) * stride; };
  e[idx(0, 0)] = q[idx(0, 0)];
  for (int j = 1; j < width; ++j) e[idx(0, j)] = q[idx(0, j)] - q[idx(0, j - 1)];
  for (int i = 1; i < height; ++i)
    for (int j = 0; j < width; ++j) e[idx(i, j)] = q[idx(i, j)] - q[idx(i - 1, j)];
}

void predict_inverse_plane(const int32_t* e, int height, int width, int stride,
                           int32_t* q) {
  auto idx = [&](int i, int j) { return (static_cast<size_t>(i) * width + j) * stride; };
  q[idx(0, 0)] = e[idx(0, 0)];
  for (int j = 1; j < width; ++j) q[idx(0, j)] = e[idx(0, j)] + q[idx(0, j - 1)];
  for (int i = 1; i < height; ++i)
    for (int j = 0; j < width; ++j) q[idx(i, j)] = e[idx(i, j)] + q[idx(i - 1, j)];
}

IndexPlane predict_forward(const IndexPlane& q) {
  IndexPlane e = q;
  for (int c = 0; c < q.channels; ++c)
    predict_forward_plane(q.values.data() + c, q.height, q.width, q.channels,
                          e.values.data() + c);
  return e;
}

IndexPlane predict_inverse(const IndexPlane& e) {
  IndexPlane q = e;
  for (int c = 0; c < e.channels; ++c)
    predict_inverse_plane(e.values.data() + c, e.height, e.width, e.channels,
                          q.values.data() + c);
  return q;
}

} // namespace lfic
