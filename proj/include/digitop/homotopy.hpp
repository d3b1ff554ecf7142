#pragma once

#include "digitop/cover2d.hpp"

namespace digitop {

// A cylinder-object homotopy: a continuous map X x I_N -> Y through N >= 1
// discrete stages, stored as a full table.
class Homotopy {
 public:
  Homotopy(DigitalImage space, int stages, DigitalImage target,
           const std::function<LatticePoint(const LatticePoint&, int)>& values);

  const DigitalImage& space() const { return space_; }   // X
  int stages() const { return stages_; }                 // N
  const DigitalImage& target() const { return target_; }
  const DigitalMap& underlying() const { return underlying_; }

  LatticePoint at(const LatticePoint& x, int t) const;
  DigitalMap slice(int t) const;  // X -> Y at stage t

 private:
  DigitalImage space_;
  int stages_;
  DigitalImage target_;
  DigitalMap underlying_;
};

// True iff the end slices of h are f and g pointwise. Throws on a domain or
// codomain mismatch between h, f and g.
bool is_homotopy_between(const Homotopy& h, const DigitalMap& f,
                         const DigitalMap& g);

// For a homotopy over a path cylinder I_M x I_N: true iff both end columns
// are constant through the stages. Throws if the space is not an interval.
bool is_rel_endpoints(const Homotopy& h);

Homotopy constant_homotopy(const DigitalMap& f, int stages);
Homotopy reverse(const Homotopy& h);

// Joins two homotopies end to start; stage counts add.
Homotopy concatenate(const Homotopy& a, const Homotopy& b);

// Covers a path homotopy I_M x I_N -> Y with the rectangle construction at
// the odd factor 2k+1. The bottom and top slices of the result are the
// standard covers of the bottom and top slices of h; endpoint-relative and
// based-loop homotopies stay endpoint-relative and based.
Homotopy cover_homotopy(const Homotopy& h, int k);

// True iff the image is the interval {0, ..., N} in Z for some N >= 0.
bool is_interval_image(const DigitalImage& image);

}  // namespace digitop
