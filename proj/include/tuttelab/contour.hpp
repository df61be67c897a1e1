#pragma once

#include <cstdint>
#include <vector>

namespace tuttelab {

// Corner walk shared by the bijections. Starting from dart d, a paired dart is
// followed to its other end and the walk turns counterclockwise there
// (sigma o alpha, the face on the right of d); a dangling dart (partner -1) is
// passed around at its own vertex (sigma). On a map this is the face
// permutation; on a tree with half-edges it is the contour of the outer face.
inline int32_t contour_next(const std::vector<int32_t>& sigma, const std::vector<int32_t>& partner,
                            int32_t d) {
  return partner[d] < 0 ? sigma[d] : sigma[partner[d]];
}

// Darts met by the walk from start until it returns to start.
inline std::vector<int32_t> contour(const std::vector<int32_t>& sigma,
                                    const std::vector<int32_t>& partner, int32_t start) {
  std::vector<int32_t> out;
  int32_t d = start;
  do {
    out.push_back(d);
    d = contour_next(sigma, partner, d);
  } while (d != start);
  return out;
}

}  // namespace tuttelab
