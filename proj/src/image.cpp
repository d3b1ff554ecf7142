#include "digitop/image.hpp"

#include <algorithm>
#include <stdexcept>

namespace digitop {

DigitalImage::DigitalImage(int dim, std::vector<LatticePoint> points)
    : dim_(dim), points_(std::move(points)) {
  if (dim_ < 1) throw std::invalid_argument("image dimension must be >= 1");
  if (points_.empty()) throw std::invalid_argument("image must be nonempty");
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dim_)
      throw std::invalid_argument("point " + to_string(p) +
                                  " does not have dimension " +
                                  std::to_string(dim_));
  }
  std::sort(points_.begin(), points_.end());
  index_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0 && points_[i] == points_[i - 1])
      throw std::invalid_argument("duplicate point " + to_string(points_[i]));
    index_.emplace(points_[i], i);
  }
}

bool DigitalImage::contains(const LatticePoint& p) const {
  return index_.find(p) != index_.end();
}

std::size_t DigitalImage::index_of(const LatticePoint& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::invalid_argument("point " + to_string(p) + " not in image");
  return it->second;
}

std::vector<LatticePoint> DigitalImage::neighbours(const LatticePoint& p) const {
  if (static_cast<int>(p.size()) != dim_)
    throw std::invalid_argument("dimension mismatch in neighbours()");
  std::vector<LatticePoint> out;
  // Offsets in {-1,0,1}^dim visited in lexicographic order, so the resulting
  // neighbour list is lexicographically sorted.
  LatticePoint off(dim_, -1);
  for (;;) {
    bool zero = std::all_of(off.begin(), off.end(), [](int c) { return c == 0; });
    if (!zero) {
      LatticePoint q = add(p, off);
      if (contains(q)) out.push_back(std::move(q));
    }
    int i = dim_ - 1;
    while (i >= 0 && off[i] == 1) off[i--] = -1;
    if (i < 0) break;
    ++off[i];
  }
  return out;
}

DigitalImage interval(int n) {
  if (n < 0) throw std::invalid_argument("interval length must be >= 0");
  std::vector<LatticePoint> pts;
  pts.reserve(n + 1);
  for (int i = 0; i <= n; ++i) pts.push_back({i});
  return DigitalImage(1, std::move(pts));
}

DigitalImage single_point(const LatticePoint& p) {
  return DigitalImage(static_cast<int>(p.size()), {p});
}

DigitalImage diamond() {
  return DigitalImage(2, {pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)});
}

}  // namespace digitop
