#include "digitop/geometry.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace digitop {

LatticePoint pt(int x) { return {x}; }
LatticePoint pt(int x, int y) { return {x, y}; }
LatticePoint pt(int x, int y, int z) { return {x, y, z}; }

namespace {
void require_same_dim(const LatticePoint& p, const LatticePoint& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("lattice points have different dimensions: " +
                                std::to_string(p.size()) + " vs " +
                                std::to_string(q.size()));
}
}  // namespace

bool adjacent(const LatticePoint& p, const LatticePoint& q) {
  require_same_dim(p, q);
  bool equal = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int d = p[i] - q[i];
    if (d < -1 || d > 1) return false;
    if (d != 0) equal = false;
  }
  return !equal;
}

bool adjacent_or_equal(const LatticePoint& p, const LatticePoint& q) {
  require_same_dim(p, q);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int d = p[i] - q[i];
    if (d < -1 || d > 1) return false;
  }
  return true;
}

LatticePoint add(const LatticePoint& p, const LatticePoint& q) {
  require_same_dim(p, q);
  LatticePoint r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] + q[i];
  return r;
}

LatticePoint sub(const LatticePoint& p, const LatticePoint& q) {
  require_same_dim(p, q);
  LatticePoint r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] - q[i];
  return r;
}

LatticePoint scale(int c, const LatticePoint& p) {
  LatticePoint r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = c * p[i];
  return r;
}

int chebyshev(const LatticePoint& p, const LatticePoint& q) {
  require_same_dim(p, q);
  int m = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    m = std::max(m, std::abs(p[i] - q[i]));
  return m;
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

LatticePoint floor_div(const LatticePoint& p, int b) {
  LatticePoint r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = floor_div(p[i], b);
  return r;
}

std::size_t PointHash::operator()(const LatticePoint& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ p.size();
  for (int c : p) {
    h ^= static_cast<std::size_t>(static_cast<unsigned int>(c)) +
         0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  s += ")";
  return s;
}

}  // namespace digitop
