#include "digitop/product.hpp"

#include <stdexcept>

namespace digitop {

LatticePoint concat(const LatticePoint& p, const LatticePoint& q) {
  LatticePoint r;
  r.reserve(p.size() + q.size());
  r.insert(r.end(), p.begin(), p.end());
  r.insert(r.end(), q.begin(), q.end());
  return r;
}

DigitalImage product_image(const DigitalImage& x, const DigitalImage& y) {
  std::vector<LatticePoint> pts;
  pts.reserve(x.size() * y.size());
  for (const auto& p : x.points())
    for (const auto& q : y.points()) pts.push_back(concat(p, q));
  return DigitalImage(x.dim() + y.dim(), std::move(pts));
}

DigitalMap proj_first(const DigitalImage& x, const DigitalImage& y) {
  const int m = x.dim();
  return DigitalMap::from_function(
      product_image(x, y), x, [m](const LatticePoint& p) {
        return LatticePoint(p.begin(), p.begin() + m);
      });
}

DigitalMap proj_second(const DigitalImage& x, const DigitalImage& y) {
  const int m = x.dim();
  return DigitalMap::from_function(
      product_image(x, y), y, [m](const LatticePoint& p) {
        return LatticePoint(p.begin() + m, p.end());
      });
}

DigitalMap pair_map(const DigitalMap& f, const DigitalMap& g) {
  if (f.domain() != g.domain())
    throw std::invalid_argument("pair_map: the two maps have different domains");
  return DigitalMap::from_function(
      f.domain(), product_image(f.codomain(), g.codomain()),
      [&](const LatticePoint& a) { return concat(f(a), g(a)); });
}

DigitalMap product_map(const std::vector<DigitalMap>& fs) {
  if (fs.empty()) throw std::invalid_argument("product_map: no factors");
  DigitalImage dom = fs[0].domain();
  DigitalImage cod = fs[0].codomain();
  for (std::size_t i = 1; i < fs.size(); ++i) {
    dom = product_image(dom, fs[i].domain());
    cod = product_image(cod, fs[i].codomain());
  }
  return DigitalMap::from_function(dom, cod, [&](const LatticePoint& p) {
    LatticePoint out;
    out.reserve(cod.dim());
    std::size_t offset = 0;
    for (const auto& f : fs) {
      LatticePoint block(p.begin() + offset,
                         p.begin() + offset + f.domain().dim());
      offset += f.domain().dim();
      const auto& v = f(block);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  });
}

DigitalMap product_map(const DigitalMap& f, const DigitalMap& g) {
  return product_map(std::vector<DigitalMap>{f, g});
}

DigitalMap diagonal_map(const DigitalImage& x) {
  return DigitalMap::from_function(
      x, product_image(x, x),
      [](const LatticePoint& p) { return concat(p, p); });
}

}  // namespace digitop
