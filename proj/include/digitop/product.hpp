#pragma once

#include <vector>

#include "digitop/map.hpp"

namespace digitop {

// Cartesian product with concatenated coordinates. Because adjacency is
// derived coordinate-wise, the product automatically carries the strong
// adjacency and is the categorical product.
DigitalImage product_image(const DigitalImage& x, const DigitalImage& y);

DigitalMap proj_first(const DigitalImage& x, const DigitalImage& y);
DigitalMap proj_second(const DigitalImage& x, const DigitalImage& y);

// The unique map (f, g): A -> X x Y with the given coordinate functions.
DigitalMap pair_map(const DigitalMap& f, const DigitalMap& g);

// f1 x ... x fn acting coordinate-block-wise on the product of the domains.
DigitalMap product_map(const std::vector<DigitalMap>& fs);
DigitalMap product_map(const DigitalMap& f, const DigitalMap& g);

// x -> (x, x).
DigitalMap diagonal_map(const DigitalImage& x);

LatticePoint concat(const LatticePoint& p, const LatticePoint& q);

}  // namespace digitop
