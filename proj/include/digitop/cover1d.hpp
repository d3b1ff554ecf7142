#pragma once

#include <optional>

#include "digitop/subdivision.hpp"

namespace digitop {

// A path of length N in Y: values alpha(0..N), consecutive values equal or
// adjacent. Equivalently a continuous map I_N -> Y.
class DigitalPath {
 public:
  DigitalPath(DigitalImage target, std::vector<LatticePoint> values);

  int length() const { return static_cast<int>(values_.size()) - 1; }
  const DigitalImage& target() const { return target_; }
  const std::vector<LatticePoint>& values() const { return values_; }
  const LatticePoint& at(int i) const;
  bool is_loop() const { return values_.front() == values_.back(); }

  DigitalMap as_map() const;  // I_N -> target

  friend bool operator==(const DigitalPath& a, const DigitalPath& b) {
    return a.target_ == b.target_ && a.values_ == b.values_;
  }

 private:
  DigitalImage target_;
  std::vector<LatticePoint> values_;
};

// The standard cover of a path over the odd factor 2k+1, k >= 1: a path of
// length N(2k+1)+2k in S(Y, 2k+1) that maps fiber centres to fiber centres,
// interpolates between consecutive centres by the displacement vector, and
// holds constant on the end segments before the first centre and after the
// last. It is fibrewise, so the square with the standard projections
// commutes.
DigitalPath cover_path_odd(const DigitalPath& path, int k);

// A cover S(I_N, k+1) -> S(Y, k) for any k >= 2, via the partial projection:
// post-composed with it for even k, pre-composed for odd k. For odd k this is
// deliberately the weaker composite; callers wanting the centre-to-centre
// cover at an odd factor use cover_path_odd directly.
DigitalMap cover_path_any(const DigitalPath& path, int k);

// A loop in S(Y, k) covering the given loop, for any k >= 2. The domain
// factor k' is k for odd k and k+1 for even k, so k' is odd and the covered
// loop has length N k' + k' - 1. The constant end segments of the standard
// cover are loose ends: when a base point inside the fiber over the loop's
// basepoint is supplied, they are replaced by a greedy monotone lattice path
// from the base to the centre's image and back.
DigitalPath cover_loop(const DigitalPath& loop, int k,
                       const std::optional<LatticePoint>& base = std::nullopt);

}  // namespace digitop
