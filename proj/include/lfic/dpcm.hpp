#pragma once

#include <cstdint>

#include "lfic/quant.hpp"

namespace lfic {

// Causal prediction, per channel: the first sample is kept raw, the rest of
// the first row predicts from the left neighbour, and every later row
// predicts from the sample directly above.
//   e(0,0) = q(0,0)
//   e(0,j) = q(0,j) - q(0,j-1)      j > 0
//   e(i,j) = q(i,j) - q(i-1,j)      i > 0
IndexPlane predict_forward(const IndexPlane& q);
IndexPlane predict_inverse(const IndexPlane& e);

// Single-channel raw variants used by the plane ops above and by tests.
void predict_forward_plane(const int32_t* q, int height, int width, int stride,
                           int32_t* e);
void predict_inverse_plane(const int32_t* e, int height, int width, int stride,
                           int32_t* q);

} // namespace lfic
