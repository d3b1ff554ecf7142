#include "digitop/map.hpp"

#include <stdexcept>

namespace digitop {

DigitalMap::DigitalMap(DigitalImage domain, DigitalImage codomain,
                       std::vector<LatticePoint> values)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      values_(std::move(values)) {
  if (values_.size() != domain_.size())
    throw std::invalid_argument("map table size " +
                                std::to_string(values_.size()) +
                                " does not match domain size " +
                                std::to_string(domain_.size()));
  for (const auto& v : values_) {
    if (!codomain_.contains(v))
      throw std::invalid_argument("map value " + to_string(v) +
                                  " is not a point of the codomain");
  }
}

DigitalMap DigitalMap::from_pairs(
    DigitalImage domain, DigitalImage codomain,
    const std::vector<std::pair<LatticePoint, LatticePoint>>& pairs) {
  std::vector<LatticePoint> values(domain.size());
  std::vector<bool> seen(domain.size(), false);
  for (const auto& [x, y] : pairs) {
    const std::size_t i = domain.index_of(x);
    if (seen[i])
      throw std::invalid_argument("duplicate table entry for " + to_string(x));
    seen[i] = true;
    values[i] = y;
  }
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (!seen[i])
      throw std::invalid_argument("map is not total: no value for " +
                                  to_string(domain.points()[i]));
  }
  return DigitalMap(std::move(domain), std::move(codomain), std::move(values));
}

DigitalMap DigitalMap::from_function(
    DigitalImage domain, DigitalImage codomain,
    const std::function<LatticePoint(const LatticePoint&)>& f) {
  std::vector<LatticePoint> values;
  values.reserve(domain.size());
  for (const auto& p : domain.points()) values.push_back(f(p));
  return DigitalMap(std::move(domain), std::move(codomain), std::move(values));
}

DigitalMap DigitalMap::identity(const DigitalImage& x) {
  return DigitalMap(x, x, x.points());
}

DigitalMap DigitalMap::constant(DigitalImage domain, DigitalImage codomain,
                                const LatticePoint& value) {
  std::vector<LatticePoint> values(domain.size(), value);
  return DigitalMap(std::move(domain), std::move(codomain), std::move(values));
}

bool same_table(const DigitalMap& a, const DigitalMap& b) {
  return a.domain().points() == b.domain().points() &&
         a.values() == b.values();
}

ContinuityCheck is_continuous(const DigitalMap& f) {
  const auto& dom = f.domain();
  for (const auto& x : dom.points()) {
    const auto& fx = f(x);
    for (const auto& x2 : dom.neighbours(x)) {
      if (!adjacent_or_equal(fx, f(x2)))
        return {false, std::make_pair(x, x2)};
    }
  }
  return {true, std::nullopt};
}

DigitalMap compose(const DigitalMap& g, const DigitalMap& f) {
  if (f.codomain() != g.domain())
    throw std::invalid_argument(
        "compose: codomain of inner map does not match domain of outer map");
  std::vector<LatticePoint> values;
  values.reserve(f.domain().size());
  for (const auto& v : f.values()) values.push_back(g(v));
  return DigitalMap(f.domain(), g.codomain(), std::move(values));
}

}  // namespace digitop
