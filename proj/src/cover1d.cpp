#include "digitop/cover1d.hpp"

#include <stdexcept>

namespace digitop {

DigitalPath::DigitalPath(DigitalImage target, std::vector<LatticePoint> values)
    : target_(std::move(target)), values_(std::move(values)) {
  if (values_.empty())
    throw std::invalid_argument("path must have at least one value");
  for (const auto& v : values_) {
    if (!target_.contains(v))
      throw std::invalid_argument("path value " + to_string(v) +
                                  " is not a point of the target image");
  }
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
    if (!adjacent_or_equal(values_[i], values_[i + 1]))
      throw std::invalid_argument(
          "path is not continuous between positions " + std::to_string(i) +
          " and " + std::to_string(i + 1));
  }
}

const LatticePoint& DigitalPath::at(int i) const {
  if (i < 0 || i > length())
    throw std::invalid_argument("path position out of range");
  return values_[static_cast<std::size_t>(i)];
}

DigitalMap DigitalPath::as_map() const {
  return DigitalMap(interval(length()), target_, values_);
}

DigitalPath cover_path_odd(const DigitalPath& path, int k) {
  if (k < 1) throw std::invalid_argument("cover_path_odd requires k >= 1");
  const int m = 2 * k + 1;
  const int n = path.length();
  const auto bundle = subdivide(path.target(), m);

  std::vector<LatticePoint> values;
  values.reserve(static_cast<std::size_t>(n * m + 2 * k + 1));
  const LatticePoint first = fiber_centre(path.at(0), m);
  const LatticePoint last = fiber_centre(path.at(n), m);
  for (int j = 0; j <= n * m + 2 * k; ++j) {
    if (j < k) {
      values.push_back(first);
    } else if (j >= n * m + k) {
      values.push_back(last);
    } else {
      const int q = (j - k) / m;
      const int r = (j - k) % m;
      const LatticePoint step = sub(path.at(q + 1), path.at(q));
      values.push_back(add(fiber_centre(path.at(q), m), scale(r, step)));
    }
  }
  return DigitalPath(bundle.subdivided(), std::move(values));
}

DigitalMap cover_path_any(const DigitalPath& path, int k) {
  if (k < 2) throw std::invalid_argument("cover_path_any requires k >= 2");
  if (k % 2 == 0) {
    // Cover at the odd factor k+1, then project one layer down in the
    // codomain.
    const DigitalPath lifted = cover_path_odd(path, k / 2);
    return compose(partial_projection(path.target(), k + 1), lifted.as_map());
  }
  // Odd k: project one layer down in the domain, then apply the cover at
  // factor k.
  const DigitalPath lifted = cover_path_odd(path, (k - 1) / 2);
  return compose(lifted.as_map(),
                 partial_projection(interval(path.length()), k + 1));
}

namespace {

// Monotone lattice path from `from` to `to` with exactly `steps` steps:
// holds at `from`, then adjusts every coordinate by +-1 toward the target
// simultaneously each step. Requires chebyshev(from, to) <= steps.
std::vector<LatticePoint> padded_monotone_path(const LatticePoint& from,
                                               const LatticePoint& to,
                                               int steps) {
  const int d = chebyshev(from, to);
  if (d > steps)
    throw std::logic_error("monotone path does not fit in the constant run");
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps - d; ++i) out.push_back(from);
  LatticePoint cur = from;
  for (int i = 0; i < d; ++i) {
    for (std::size_t c = 0; c < cur.size(); ++c) {
      if (cur[c] < to[c]) ++cur[c];
      else if (cur[c] > to[c]) --cur[c];
    }
    out.push_back(cur);
  }
  return out;
}

}  // namespace

DigitalPath cover_loop(const DigitalPath& loop, int k,
                       const std::optional<LatticePoint>& base) {
  if (!loop.is_loop())
    throw std::invalid_argument("cover_loop requires a loop");
  if (k < 2) throw std::invalid_argument("cover_loop requires k >= 2");
  const LatticePoint& y0 = loop.at(0);

  DigitalPath covered = [&] {
    if (k % 2 == 1) return cover_path_odd(loop, (k - 1) / 2);
    // Even k: cover at the odd factor k+1, then project the values down.
    const DigitalPath lifted = cover_path_odd(loop, k / 2);
    const DigitalMap down = partial_projection(loop.target(), k + 1);
    std::vector<LatticePoint> values;
    values.reserve(lifted.values().size());
    for (const auto& v : lifted.values()) values.push_back(down(v));
    return DigitalPath(subdivide(loop.target(), k).subdivided(),
                       std::move(values));
  }();

  const auto bundle = subdivide(loop.target(), k);
  const DigitalImage& fib = bundle.fiber(y0);
  const LatticePoint centre_image = covered.at(0);
  LatticePoint anchor = base.value_or(centre_image);
  if (!fib.contains(anchor))
    throw std::invalid_argument("cover_loop: base " + to_string(anchor) +
                                " is outside the fiber over the basepoint");
  if (anchor == centre_image) return covered;

  // The runs before the first centre and after the last are constant; swap
  // them for a path from the anchor to the centre's image and back.
  const int run = (k % 2 == 1) ? (k - 1) / 2 : k / 2;
  const auto approach = padded_monotone_path(anchor, centre_image, run);
  std::vector<LatticePoint> values = covered.values();
  const std::size_t end = values.size() - 1;
  for (int j = 0; j <= run; ++j) {
    values[static_cast<std::size_t>(j)] = approach[static_cast<std::size_t>(j)];
    values[end - static_cast<std::size_t>(j)] =
        approach[static_cast<std::size_t>(j)];
  }
  return DigitalPath(covered.target(), std::move(values));
}

}  // namespace digitop
