#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "digitop/geometry.hpp"

namespace digitop {

// A digital image: a finite, nonempty set of lattice points in Z^n with the
// adjacency inherited from the lattice. Points are kept sorted
// lexicographically; membership queries go through a hashed index. Adjacency
// is always derived from coordinates, never stored.
class DigitalImage {
 public:
  DigitalImage(int dim, std::vector<LatticePoint> points);

  int dim() const { return dim_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  bool contains(const LatticePoint& p) const;
  std::size_t index_of(const LatticePoint& p) const;  // throws if absent

  // Points of the image adjacent to p, in lexicographic order. p itself is
  // never included.
  std::vector<LatticePoint> neighbours(const LatticePoint& p) const;

  friend bool operator==(const DigitalImage& a, const DigitalImage& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }
  friend bool operator!=(const DigitalImage& a, const DigitalImage& b) {
    return !(a == b);
  }

 private:
  int dim_;
  std::vector<LatticePoint> points_;
  std::unordered_map<LatticePoint, std::size_t, PointHash> index_;
};

// The digital interval I_n = {0, ..., n} in Z.
DigitalImage interval(int n);

DigitalImage single_point(const LatticePoint& p);

// {(1,0), (0,1), (-1,0), (0,-1)}: the smallest digital circle.
DigitalImage diamond();

}  // namespace digitop
