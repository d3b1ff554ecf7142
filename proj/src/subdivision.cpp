#include "digitop/subdivision.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "digitop/product.hpp"

namespace digitop {

struct SubdivisionBundle::FiberCache {
  std::mutex mutex;
  std::map<LatticePoint, DigitalImage> blocks;
};

SubdivisionBundle::SubdivisionBundle(DigitalImage source, int factor,
                                     DigitalImage subdivided,
                                     DigitalMap projection)
    : source_(std::move(source)),
      factor_(factor),
      subdivided_(std::move(subdivided)),
      projection_(std::move(projection)),
      fibers_(std::make_shared<FiberCache>()) {}

const DigitalImage& SubdivisionBundle::fiber(const LatticePoint& x) const {
  if (!source_.contains(x))
    throw std::invalid_argument("fiber: " + to_string(x) +
                                " is not a point of the source image");
  std::lock_guard<std::mutex> lock(fibers_->mutex);
  auto it = fibers_->blocks.find(x);
  if (it != fibers_->blocks.end()) return it->second;

  std::vector<LatticePoint> pts;
  const int n = source_.dim();
  LatticePoint off(n, 0);
  for (;;) {
    LatticePoint p = add(scale(factor_, x), off);
    pts.push_back(std::move(p));
    int i = n - 1;
    while (i >= 0 && off[i] == factor_ - 1) off[i--] = 0;
    if (i < 0) break;
    ++off[i];
  }
  auto [pos, inserted] =
      fibers_->blocks.emplace(x, DigitalImage(n, std::move(pts)));
  return pos->second;
}

SubdivisionBundle subdivide(const DigitalImage& x, int k) {
  if (k < 1) throw std::invalid_argument("subdivision factor must be >= 1");
  if (k == 1)
    return SubdivisionBundle(x, 1, x, DigitalMap::identity(x));
  const int n = x.dim();
  std::vector<LatticePoint> pts;
  pts.reserve(x.size());
  for (const auto& p : x.points()) {
    LatticePoint off(n, 0);
    for (;;) {
      pts.push_back(add(scale(k, p), off));
      int i = n - 1;
      while (i >= 0 && off[i] == k - 1) off[i--] = 0;
      if (i < 0) break;
      ++off[i];
    }
  }
  DigitalImage sub(n, std::move(pts));
  DigitalMap proj = DigitalMap::from_function(
      sub, x, [k](const LatticePoint& p) { return floor_div(p, k); });
  return SubdivisionBundle(x, k, std::move(sub), std::move(proj));
}

DigitalMap partial_projection(const DigitalImage& x, int k) {
  if (k < 3)
    throw std::invalid_argument("partial projection requires factor >= 3");
  const auto from = subdivide(x, k);
  const auto to = subdivide(x, k - 1);
  const int half = k / 2;
  return DigitalMap::from_function(
      from.subdivided(), to.subdivided(), [&](const LatticePoint& p) {
        LatticePoint out(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
          const int base = floor_div(p[i], k);
          const int j = p[i] - k * base;
          const int s = (j <= half - 1) ? j : j - 1;
          out[i] = (k - 1) * base + s;
        }
        return out;
      });
}

DigitalMap cover_inclusion(const DigitalImage& a, const DigitalImage& x,
                           int k) {
  if (a.dim() != x.dim())
    throw std::invalid_argument("cover_inclusion: dimension mismatch");
  for (const auto& p : a.points()) {
    if (!x.contains(p))
      throw std::invalid_argument("cover_inclusion: " + to_string(p) +
                                  " is not a point of the larger image");
  }
  const auto sub_a = subdivide(a, k);
  const auto sub_x = subdivide(x, k);
  return DigitalMap::from_function(
      sub_a.subdivided(), sub_x.subdivided(),
      [](const LatticePoint& p) { return p; });
}

DigitalMap iterated_subdivision_iso(const DigitalImage& x, int k, int l) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("subdivision factors must be >= 1");
  const auto twice = subdivide(subdivide(x, k).subdivided(), l);
  const auto once = subdivide(x, k * l);
  // l(kx + r) + t = (kl)x + (lr + t) with 0 <= lr + t <= kl - 1, so the two
  // point sets coincide and the table is the identity.
  return DigitalMap::from_function(twice.subdivided(), once.subdivided(),
                                   [](const LatticePoint& p) { return p; });
}

DigitalMap product_subdivision_iso(const DigitalImage& x,
                                   const DigitalImage& y, int k) {
  const auto lhs = subdivide(product_image(x, y), k);
  const auto rhs =
      product_image(subdivide(x, k).subdivided(), subdivide(y, k).subdivided());
  return DigitalMap::from_function(lhs.subdivided(), rhs,
                                   [](const LatticePoint& p) { return p; });
}

LatticePoint fiber_centre(const LatticePoint& x, int factor) {
  if (factor < 1 || factor % 2 == 0)
    throw std::invalid_argument("fiber_centre requires an odd factor");
  const int half = (factor - 1) / 2;
  LatticePoint c(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) c[i] = factor * x[i] + half;
  return c;
}

}  // namespace digitop
