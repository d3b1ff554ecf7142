#include "digitop/cover2d.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "digitop/product.hpp"

namespace digitop {

int centring(int k, int x) {
  if (k < 1) throw std::invalid_argument("centring requires k >= 1");
  if (x < k || x > 3 * k + 1)
    throw std::invalid_argument("centring argument " + std::to_string(x) +
                                " outside [" + std::to_string(k) + ", " +
                                std::to_string(3 * k + 1) + "]");
  if (x <= 2 * k - 1) return x + 1;
  if (x >= 2 * k + 2) return x - 1;
  return x;  // 2k and 2k+1 are fixed
}

int centring_pow(int k, int s, int x) {
  if (s < 0) throw std::invalid_argument("centring_pow requires s >= 0");
  for (int i = 0; i < s; ++i) x = centring(k, x);
  return x;
}

namespace {

using Assign = std::function<void(const LatticePoint&, const LatticePoint&)>;

// Fills the quadrants of the square [m*i + k, m*(i+1) + k] x [m*j + k,
// m*(j+1) + k] (m = 2k+1) over the present corners. rel_corners maps a
// corner (p, q) of {0,1}^2 to a unit-cube corner in {0,1}^n; outputs are
// translated by m*base, so the target cube is [base, base+1]^n. Every value
// is emitted through assign, including the edges and corners of the square,
// so overlapping fills cross-check each other.
void fill_square(int k, int i, int j,
                 const std::map<LatticePoint, LatticePoint>& rel_corners,
                 const LatticePoint& base, const Assign& assign) {
  if (rel_corners.empty()) return;
  const int m = 2 * k + 1;
  const std::size_t n = rel_corners.begin()->second.size();

  for (const auto& [v, fv] : rel_corners) {
    const auto hn = rel_corners.find(pt(1 - v[0], v[1]));
    const auto vn = rel_corners.find(pt(v[0], 1 - v[1]));
    const int corner_s = v[0] == 0 ? k : 3 * k + 1;
    const int corner_t = v[1] == 0 ? k : 3 * k + 1;
    for (int s = 0; s <= k; ++s) {
      for (int t = 0; t <= k; ++t) {
        const LatticePoint p = pt(m * i + centring_pow(k, s, corner_s),
                                  m * j + centring_pow(k, t, corner_t));
        LatticePoint value(n);
        for (std::size_t r = 0; r < n; ++r) {
          const bool hdiff = hn != rel_corners.end() && fv[r] != hn->second[r];
          const bool vdiff = vn != rel_corners.end() && fv[r] != vn->second[r];
          int e;
          if (s == t) e = s;
          else if (t < s) e = hdiff ? s : t;
          else e = vdiff ? t : s;
          value[r] = m * base[r] + centring_pow(k, e, m * fv[r] + k);
        }
        assign(p, value);
      }
    }
  }
}

// Anchors an absolute corner assignment at the componentwise minimum of the
// present corner images and returns the relative corners; continuity of the
// source map keeps every relative coordinate in {0,1}.
std::pair<std::map<LatticePoint, LatticePoint>, LatticePoint> anchor_corners(
    const std::map<LatticePoint, LatticePoint>& corner_values) {
  const std::size_t n = corner_values.begin()->second.size();
  LatticePoint base(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    int lo = corner_values.begin()->second[r];
    for (const auto& [v, fv] : corner_values) lo = std::min(lo, fv[r]);
    base[r] = lo;
  }
  std::map<LatticePoint, LatticePoint> rel;
  for (const auto& [v, fv] : corner_values) {
    LatticePoint w(n);
    for (std::size_t r = 0; r < n; ++r) {
      w[r] = fv[r] - base[r];
      if (w[r] < 0 || w[r] > 1)
        throw std::logic_error(
            "fill_square: corner images do not fit in a unit cube");
    }
    rel.emplace(v, std::move(w));
  }
  return {std::move(rel), std::move(base)};
}

DigitalImage cube_image(int k, std::size_t n) {
  std::vector<LatticePoint> pts;
  LatticePoint p(n, k);
  for (;;) {
    pts.push_back(p);
    std::size_t i = n;
    while (i > 0 && p[i - 1] == 3 * k + 1) p[--i] = k;
    if (i == 0) break;
    ++p[i - 1];
  }
  return DigitalImage(static_cast<int>(n), std::move(pts));
}

}  // namespace

DigitalMap extend_unit_square(const CornerData& data, int k) {
  if (k < 1) throw std::invalid_argument("extend_unit_square requires k >= 1");
  if (data.corners.empty())
    throw std::invalid_argument("extend_unit_square: empty corner set");
  std::size_t n = 0;
  for (const auto& [v, fv] : data.corners) {
    if (v.size() != 2 || v[0] < 0 || v[0] > 1 || v[1] < 0 || v[1] > 1)
      throw std::invalid_argument("corner " + to_string(v) +
                                  " is not a corner of the unit square");
    if (n == 0) n = fv.size();
    if (fv.size() != n || fv.empty())
      throw std::invalid_argument("corner images have inconsistent dimension");
    for (int c : fv)
      if (c < 0 || c > 1)
        throw std::invalid_argument("corner image " + to_string(fv) +
                                    " is not a corner of the unit cube");
  }

  std::unordered_map<LatticePoint, LatticePoint, PointHash> table;
  fill_square(k, 0, 0, data.corners, LatticePoint(n, 0),
              [&table](const LatticePoint& p, const LatticePoint& v) {
                auto [it, inserted] = table.emplace(p, v);
                if (!inserted && it->second != v)
                  throw std::logic_error("inconsistent unit-square fill at " +
                                         to_string(p));
              });

  std::vector<LatticePoint> domain_pts;
  domain_pts.reserve(table.size());
  for (const auto& [p, v] : table) domain_pts.push_back(p);
  DigitalImage domain(2, std::move(domain_pts));
  return DigitalMap::from_function(
      domain, cube_image(k, n),
      [&table](const LatticePoint& p) { return table.at(p); });
}

RectangleMap::RectangleMap(int width, int height, DigitalImage target,
                           std::vector<LatticePoint> values)
    : width_(width),
      height_(height),
      target_(std::move(target)),
      values_(std::move(values)) {
  if (width_ < 0 || height_ < 0)
    throw std::invalid_argument("rectangle sides must be >= 0");
  const std::size_t expected =
      static_cast<std::size_t>(width_ + 1) * static_cast<std::size_t>(height_ + 1);
  if (values_.size() != expected)
    throw std::invalid_argument("rectangle table has wrong size");
  auto check = is_continuous(as_map());
  if (!check)
    throw std::invalid_argument(
        "rectangle map is not continuous; first violation at " +
        to_string(check.violation->first) + " ~ " +
        to_string(check.violation->second));
}

RectangleMap RectangleMap::from_function(
    int width, int height, DigitalImage target,
    const std::function<LatticePoint(int, int)>& f) {
  std::vector<LatticePoint> values;
  values.reserve(static_cast<std::size_t>(width + 1) *
                 static_cast<std::size_t>(height + 1));
  for (int s = 0; s <= width; ++s)
    for (int t = 0; t <= height; ++t) values.push_back(f(s, t));
  return RectangleMap(width, height, std::move(target), std::move(values));
}

const LatticePoint& RectangleMap::at(int s, int t) const {
  if (s < 0 || s > width_ || t < 0 || t > height_)
    throw std::invalid_argument("rectangle index out of range");
  return values_[static_cast<std::size_t>(s) *
                     static_cast<std::size_t>(height_ + 1) +
                 static_cast<std::size_t>(t)];
}

DigitalMap RectangleMap::as_map() const {
  return DigitalMap::from_function(
      product_image(interval(width_), interval(height_)), target_,
      [this](const LatticePoint& p) { return at(p[0], p[1]); });
}

DigitalMap cover_rectangle(const RectangleMap& h, int k) {
  if (k < 1) throw std::invalid_argument("cover_rectangle requires k >= 1");
  const int m = 2 * k + 1;
  const int big_m = h.width();
  const int big_n = h.height();
  const int w = big_m * m + 2 * k;   // last column index of the cover domain
  const int hh = big_n * m + 2 * k;  // last row index

  // Standard covers of the horizontal and vertical coordinate curves.
  std::vector<DigitalPath> row_cover;
  for (int j = 0; j <= big_n; ++j) {
    std::vector<LatticePoint> vals;
    for (int s = 0; s <= big_m; ++s) vals.push_back(h.at(s, j));
    row_cover.push_back(cover_path_odd(DigitalPath(h.target(), vals), k));
  }
  std::vector<DigitalPath> col_cover;
  for (int i = 0; i <= big_m; ++i) {
    std::vector<LatticePoint> vals;
    for (int t = 0; t <= big_n; ++t) vals.push_back(h.at(i, t));
    col_cover.push_back(cover_path_odd(DigitalPath(h.target(), vals), k));
  }

  std::unordered_map<LatticePoint, LatticePoint, PointHash> table;
  auto assign = [&table](const LatticePoint& p, const LatticePoint& v) {
    auto [it, inserted] = table.emplace(p, v);
    if (!inserted && it->second != v)
      throw std::logic_error("inconsistent rectangle fill at " + to_string(p));
  };
  const auto centre = [m, k](int idx) { return m * idx + k; };

  // Bands outside the centres copy the boundary curves.
  for (int t = 0; t <= hh; ++t) {
    for (int s = 0; s <= k - 1; ++s) assign(pt(s, t), col_cover[0].at(t));
    for (int s = centre(big_m) + 1; s <= w; ++s)
      assign(pt(s, t), col_cover[big_m].at(t));
  }
  for (int s = 0; s <= w; ++s) {
    for (int t = 0; t <= k - 1; ++t) assign(pt(s, t), row_cover[0].at(s));
    for (int t = centre(big_n) + 1; t <= hh; ++t)
      assign(pt(s, t), row_cover[big_n].at(s));
  }
  // Rows and columns through the centres.
  for (int i = 0; i <= big_m; ++i)
    for (int t = 0; t <= hh; ++t) assign(pt(centre(i), t), col_cover[i].at(t));
  for (int j = 0; j <= big_n; ++j)
    for (int s = 0; s <= w; ++s) assign(pt(s, centre(j)), row_cover[j].at(s));

  // Squares whose corners are centres.
  for (int i = 0; i < big_m; ++i) {
    for (int j = 0; j < big_n; ++j) {
      std::map<LatticePoint, LatticePoint> corners;
      for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q)
          corners.emplace(pt(p, q), h.at(i + p, j + q));
      const auto [rel, base] = anchor_corners(corners);
      fill_square(k, i, j, rel, base, assign);
    }
  }

  const DigitalImage domain = product_image(
      subdivide(interval(big_m), m).subdivided(),
      subdivide(interval(big_n), m).subdivided());
  DigitalMap cover = DigitalMap::from_function(
      domain, subdivide(h.target(), m).subdivided(),
      [&table](const LatticePoint& p) {
        auto it = table.find(p);
        if (it == table.end())
          throw std::logic_error("rectangle fill left " + to_string(p) +
                                 " unassigned");
        return it->second;
      });
  const auto cert = verify_cover(h.as_map(), cover, m, m);
  if (!cert.pass())
    throw std::logic_error("cover_rectangle produced an invalid cover");
  return cover;
}

DigitalMap cover_2d(const DigitalMap& f, int k) {
  if (f.domain().dim() != 2)
    throw std::invalid_argument("cover_2d requires a two-dimensional domain");
  if (k < 1) throw std::invalid_argument("cover_2d requires k >= 1");
  auto check = is_continuous(f);
  if (!check)
    throw std::invalid_argument("cover_2d: map is not continuous at " +
                                to_string(check.violation->first) + " ~ " +
                                to_string(check.violation->second));

  const int m = 2 * k + 1;
  const auto dom = subdivide(f.domain(), m);
  const auto cod = subdivide(f.codomain(), m);

  std::unordered_map<LatticePoint, LatticePoint, PointHash> table;
  auto assign = [&table](const LatticePoint& p, const LatticePoint& v) {
    auto [it, inserted] = table.emplace(p, v);
    if (!inserted && it->second != v)
      throw std::logic_error("inconsistent fill at " + to_string(p));
  };

  // Centres, then spokes: interpolate toward present axis neighbours and
  // stay constant toward absent ones.
  static const std::vector<LatticePoint> kAxisDirs = {
      pt(-1, 0), pt(0, -1), pt(0, 1), pt(1, 0)};
  for (const auto& x : f.domain().points()) {
    const LatticePoint cx = fiber_centre(x, m);
    const LatticePoint cfx = fiber_centre(f(x), m);
    assign(cx, cfx);
    for (const auto& dir : kAxisDirs) {
      const LatticePoint nb = add(x, dir);
      const bool present = f.domain().contains(nb);
      const LatticePoint delta =
          present ? sub(f(nb), f(x)) : LatticePoint(f.codomain().dim(), 0);
      for (int t = 1; t <= k; ++t)
        assign(add(cx, scale(t, dir)), add(cfx, scale(t, delta)));
    }
  }

  // Cookie-cutter squares across a grid that covers every fiber quadrant.
  int min_x = f.domain().points().front()[0], max_x = min_x;
  int min_y = f.domain().points().front()[1], max_y = min_y;
  for (const auto& p : f.domain().points()) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  for (int i = min_x - 1; i <= max_x; ++i) {
    for (int j = min_y - 1; j <= max_y; ++j) {
      std::map<LatticePoint, LatticePoint> corners;
      for (int p = 0; p <= 1; ++p) {
        for (int q = 0; q <= 1; ++q) {
          const LatticePoint corner = pt(i + p, j + q);
          if (f.domain().contains(corner)) corners.emplace(pt(p, q), f(corner));
        }
      }
      if (corners.empty()) continue;
      const auto [rel, base] = anchor_corners(corners);
      fill_square(k, i, j, rel, base, assign);
    }
  }

  DigitalMap cover = DigitalMap::from_function(
      dom.subdivided(), cod.subdivided(), [&table](const LatticePoint& p) {
        auto it = table.find(p);
        if (it == table.end())
          throw std::logic_error("fill left " + to_string(p) + " unassigned");
        return it->second;
      });
  const auto cert = verify_cover(f, cover, m, m);
  if (!cert.pass())
    throw std::logic_error("cover_2d produced an invalid cover");
  return cover;
}

DigitalMap cover_2d_any(const DigitalMap& f, int k) {
  if (k < 2) throw std::invalid_argument("cover_2d_any requires k >= 2");
  DigitalMap cover = [&] {
    if (k % 2 == 0)
      return compose(partial_projection(f.codomain(), k + 1),
                     cover_2d(f, k / 2));
    return compose(cover_2d(f, (k - 1) / 2),
                   partial_projection(f.domain(), k + 1));
  }();
  const auto cert = verify_cover(f, cover, k + 1, k);
  if (!cert.pass())
    throw std::logic_error("cover_2d_any produced an invalid cover");
  return cover;
}

}  // namespace digitop
