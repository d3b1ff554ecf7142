#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "digitop/image.hpp"

namespace digitop {

// A total function between digital images, stored as an explicit table
// aligned with the domain's point order. Totality and well-typedness are
// checked at construction; continuity is not an invariant and is queried
// through is_continuous.
class DigitalMap {
 public:
  // values[i] is the image of domain.points()[i].
  DigitalMap(DigitalImage domain, DigitalImage codomain,
             std::vector<LatticePoint> values);

  static DigitalMap from_pairs(
      DigitalImage domain, DigitalImage codomain,
      const std::vector<std::pair<LatticePoint, LatticePoint>>& pairs);
  static DigitalMap from_function(
      DigitalImage domain, DigitalImage codomain,
      const std::function<LatticePoint(const LatticePoint&)>& f);
  static DigitalMap identity(const DigitalImage& x);
  static DigitalMap constant(DigitalImage domain, DigitalImage codomain,
                             const LatticePoint& value);

  const DigitalImage& domain() const { return domain_; }
  const DigitalImage& codomain() const { return codomain_; }
  const std::vector<LatticePoint>& values() const { return values_; }

  const LatticePoint& operator()(const LatticePoint& p) const {
    return values_[domain_.index_of(p)];
  }

  friend bool operator==(const DigitalMap& a, const DigitalMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
           a.values_ == b.values_;
  }
  friend bool operator!=(const DigitalMap& a, const DigitalMap& b) {
    return !(a == b);
  }

 private:
  DigitalImage domain_;
  DigitalImage codomain_;
  std::vector<LatticePoint> values_;
};

// Same domain point set and pointwise-equal values; codomains may differ.
bool same_table(const DigitalMap& a, const DigitalMap& b);

struct ContinuityCheck {
  bool continuous = true;
  // Lexicographically least violating ordered pair (x, x'), if any: x and x'
  // are adjacent in the domain but their images are neither equal nor
  // adjacent.
  std::optional<std::pair<LatticePoint, LatticePoint>> violation;
  explicit operator bool() const { return continuous; }
};

ContinuityCheck is_continuous(const DigitalMap& f);

// g after f; requires codomain(f) == domain(g) as images.
DigitalMap compose(const DigitalMap& g, const DigitalMap& f);

}  // namespace digitop
