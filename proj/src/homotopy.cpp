#include "digitop/homotopy.hpp"

#include <stdexcept>

#include "digitop/product.hpp"

namespace digitop {

Homotopy::Homotopy(
    DigitalImage space, int stages, DigitalImage target,
    const std::function<LatticePoint(const LatticePoint&, int)>& values)
    : space_(std::move(space)),
      stages_(stages),
      target_(std::move(target)),
      underlying_(DigitalMap::from_function(
          product_image(space_, interval(stages_ >= 1 ? stages_ : 0)), target_,
          [&values, this](const LatticePoint& p) {
            LatticePoint x(p.begin(), p.end() - 1);
            return values(x, p.back());
          })) {
  if (stages_ < 1) throw std::invalid_argument("homotopy needs stages >= 1");
  auto check = is_continuous(underlying_);
  if (!check)
    throw std::invalid_argument("homotopy table is not continuous at " +
                                to_string(check.violation->first) + " ~ " +
                                to_string(check.violation->second));
}

LatticePoint Homotopy::at(const LatticePoint& x, int t) const {
  LatticePoint p = x;
  p.push_back(t);
  return underlying_(p);
}

DigitalMap Homotopy::slice(int t) const {
  if (t < 0 || t > stages_)
    throw std::invalid_argument("homotopy stage out of range");
  return DigitalMap::from_function(
      space_, target_, [this, t](const LatticePoint& x) { return at(x, t); });
}

bool is_homotopy_between(const Homotopy& h, const DigitalMap& f,
                         const DigitalMap& g) {
  if (f.domain() != h.space() || g.domain() != h.space() ||
      f.codomain() != h.target() || g.codomain() != h.target())
    throw std::invalid_argument(
        "is_homotopy_between: maps do not share the homotopy's shape");
  for (const auto& x : h.space().points()) {
    if (h.at(x, 0) != f(x)) return false;
    if (h.at(x, h.stages()) != g(x)) return false;
  }
  return true;
}

bool is_interval_image(const DigitalImage& image) {
  if (image.dim() != 1) return false;
  const auto& pts = image.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i][0] != static_cast<int>(i)) return false;
  return true;
}

bool is_rel_endpoints(const Homotopy& h) {
  if (!is_interval_image(h.space()))
    throw std::invalid_argument(
        "is_rel_endpoints: homotopy space is not a path cylinder");
  const int m = static_cast<int>(h.space().size()) - 1;
  for (int t = 1; t <= h.stages(); ++t) {
    if (h.at(pt(0), t) != h.at(pt(0), 0)) return false;
    if (h.at(pt(m), t) != h.at(pt(m), 0)) return false;
  }
  return true;
}

Homotopy constant_homotopy(const DigitalMap& f, int stages) {
  return Homotopy(f.domain(), stages, f.codomain(),
                  [&f](const LatticePoint& x, int) { return f(x); });
}

Homotopy reverse(const Homotopy& h) {
  const int n = h.stages();
  return Homotopy(h.space(), n, h.target(),
                  [&h, n](const LatticePoint& x, int t) {
                    return h.at(x, n - t);
                  });
}

Homotopy concatenate(const Homotopy& a, const Homotopy& b) {
  if (a.space() != b.space() || a.target() != b.target())
    throw std::invalid_argument("concatenate: homotopies have different shapes");
  for (const auto& x : a.space().points())
    if (a.at(x, a.stages()) != b.at(x, 0))
      throw std::invalid_argument(
          "concatenate: end slice of the first homotopy differs from the "
          "start slice of the second");
  const int na = a.stages();
  return Homotopy(a.space(), na + b.stages(), a.target(),
                  [&a, &b, na](const LatticePoint& x, int t) {
                    return t <= na ? a.at(x, t) : b.at(x, t - na);
                  });
}

Homotopy cover_homotopy(const Homotopy& h, int k) {
  if (!is_interval_image(h.space()))
    throw std::invalid_argument(
        "cover_homotopy: homotopy space is not a path cylinder");
  const int m = static_cast<int>(h.space().size()) - 1;
  const int factor = 2 * k + 1;
  const RectangleMap rect = RectangleMap::from_function(
      m, h.stages(), h.target(),
      [&h](int s, int t) { return h.at(pt(s), t); });
  const DigitalMap covered = cover_rectangle(rect, k);
  return Homotopy(interval(m * factor + 2 * k), h.stages() * factor + 2 * k,
                  subdivide(h.target(), factor).subdivided(),
                  [&covered](const LatticePoint& x, int t) {
                    return covered(pt(x[0], t));
                  });
}

}  // namespace digitop
