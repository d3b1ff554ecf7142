#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace digitop {

// A lattice point is its list of integer coordinates; the ambient dimension
// is the list length. Comparison is lexicographic (inherited from vector).
using LatticePoint = std::vector<int>;

LatticePoint pt(int x);
LatticePoint pt(int x, int y);
LatticePoint pt(int x, int y, int z);

// Strict adjacency: p != q and every coordinate differs by at most 1.
// A point is not adjacent to itself; callers that want the reflexive
// relation use adjacent_or_equal.
bool adjacent(const LatticePoint& p, const LatticePoint& q);
bool adjacent_or_equal(const LatticePoint& p, const LatticePoint& q);

LatticePoint add(const LatticePoint& p, const LatticePoint& q);
LatticePoint sub(const LatticePoint& p, const LatticePoint& q);
LatticePoint scale(int c, const LatticePoint& p);
int chebyshev(const LatticePoint& p, const LatticePoint& q);

// Division rounding toward minus infinity (plain / truncates toward zero).
int floor_div(int a, int b);
LatticePoint floor_div(const LatticePoint& p, int b);

struct PointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

std::string to_string(const LatticePoint& p);

}  // namespace digitop
