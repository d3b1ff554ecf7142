#pragma once

#include <map>

#include "digitop/cover1d.hpp"
#include "digitop/oracle.hpp"

namespace digitop {

// The coordinate-centring function on [k, 3k+1]: one step of contraction
// toward the middle pair {2k, 2k+1}, which is fixed.
int centring(int k, int x);

// s-fold iterate of the centring function; centring_pow(k, k, x) carries the
// endpoints k and 3k+1 onto the middle pair.
int centring_pow(int k, int s, int x);

// A nonempty set of corners of the unit square together with images in
// {0,1}^n.
struct CornerData {
  std::map<LatticePoint, LatticePoint> corners;
};

// Extends the corner data over the quadrants of [k, 3k+1]^2 that sit over
// the present corners, producing a continuous map into the cube [k, 3k+1]^n
// that covers the corner assignment. Each quadrant lands in the orthant of
// its corner's image; outer edges interpolate straight toward present
// neighbouring corners and stay constant toward absent ones; the diagonal of
// each quadrant walks corner-to-central-clique.
DigitalMap extend_unit_square(const CornerData& data, int k);

// A continuous map on a rectangle I_M x I_N, stored as a full table.
class RectangleMap {
 public:
  RectangleMap(int width, int height, DigitalImage target,
               std::vector<LatticePoint> values);  // values[s*(height+1)+t]
  static RectangleMap from_function(
      int width, int height, DigitalImage target,
      const std::function<LatticePoint(int, int)>& f);

  int width() const { return width_; }    // M
  int height() const { return height_; }  // N
  const DigitalImage& target() const { return target_; }
  const LatticePoint& at(int s, int t) const;
  DigitalMap as_map() const;  // I_M x I_N -> target

 private:
  int width_;
  int height_;
  DigitalImage target_;
  std::vector<LatticePoint> values_;
};

// The canonical cover S(I_M, 2k+1) x S(I_N, 2k+1) -> S(Y, 2k+1) of a
// rectangle map: bands outside the centres copy the covers of the four
// boundary curves, rows and columns through centres copy the covers of the
// coordinate curves, and each square whose corners are centres is filled by
// the unit-square extension. The restriction to each boundary edge equals
// the standard cover of the corresponding boundary path.
DigitalMap cover_rectangle(const RectangleMap& h, int k);

// The canonical cover S(X, 2k+1) -> S(Y, 2k+1) of a continuous map with a
// two-dimensional domain: centres map to centres, spokes interpolate toward
// present axis neighbours and hold constant toward absent ones, and a grid
// of squares with centres at their corners cuts the rest into quadrants
// filled by the unit-square extension.
DigitalMap cover_2d(const DigitalMap& f, int k);

// A cover S(X, k+1) -> S(Y, k) for any k >= 2 via the partial projection,
// post-composed for even k and pre-composed for odd k.
DigitalMap cover_2d_any(const DigitalMap& f, int k);

}  // namespace digitop
