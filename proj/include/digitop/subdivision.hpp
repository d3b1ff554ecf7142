#pragma once

#include <memory>

#include "digitop/map.hpp"

namespace digitop {

// The k-fold subdivision S(X, k) of an image together with its source, the
// factor, and the standard projection rho_k (coordinate-wise floor division
// by k). Fibers are materialized lazily and memoized; the cache is populated
// write-once under a lock so bundles can be shared across threads.
class SubdivisionBundle {
 public:
  SubdivisionBundle(DigitalImage source, int factor, DigitalImage subdivided,
                    DigitalMap projection);

  const DigitalImage& source() const { return source_; }
  int factor() const { return factor_; }
  const DigitalImage& subdivided() const { return subdivided_; }
  const DigitalMap& projection() const { return projection_; }

  // The k x ... x k block over x; equals the preimage of x under the
  // projection. Throws if x is not a source point.
  const DigitalImage& fiber(const LatticePoint& x) const;

 private:
  DigitalImage source_;
  int factor_;
  DigitalImage subdivided_;
  DigitalMap projection_;
  struct FiberCache;
  std::shared_ptr<FiberCache> fibers_;
};

// S(X, k) for k >= 1; S(X, 1) = X with the identity projection.
SubdivisionBundle subdivide(const DigitalImage& x, int k);

// The partial projection S(X, k) -> S(X, k-1) for k >= 3. Coordinate-wise on
// each fiber, the offset j in [0, k-1] keeps its value below floor(k/2) and
// drops by one from floor(k/2) on, so one middle layer per axis is deleted.
DigitalMap partial_projection(const DigitalImage& x, int k);

// The canonical cover S(A, k) -> S(X, k) of an inclusion A, a subset of X;
// coordinates are preserved.
DigitalMap cover_inclusion(const DigitalImage& a, const DigitalImage& x, int k);

// The isomorphism S(S(X, k), l) -> S(X, kl). Both sides have the same point
// set, so the table is the identity on coordinates.
DigitalMap iterated_subdivision_iso(const DigitalImage& x, int k, int l);

// The isomorphism S(X x Y, k) -> S(X, k) x S(Y, k); with concatenated
// coordinates this is again the identity on coordinates.
DigitalMap product_subdivision_iso(const DigitalImage& x,
                                   const DigitalImage& y, int k);

// The middle point of the fiber S(x, factor) for odd factor 2k+1:
// (2k+1)x + (k, ..., k).
LatticePoint fiber_centre(const LatticePoint& x, int factor);

}  // namespace digitop
