#include "digitop/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace digitop {

CoverCertificate verify_cover(const DigitalMap& f, const DigitalMap& cover,
                              int k_dom, int k_cod) {
  const auto dom = subdivide(f.domain(), k_dom);
  const auto cod = subdivide(f.codomain(), k_cod);
  if (cover.domain() != dom.subdivided())
    throw std::invalid_argument(
        "verify_cover: candidate domain is not the subdivided domain");
  if (cover.codomain() != cod.subdivided())
    throw std::invalid_argument(
        "verify_cover: candidate codomain is not the subdivided codomain");

  CoverCertificate cert;
  auto continuity = is_continuous(cover);
  cert.continuous = continuity.continuous;
  cert.continuity_violation = continuity.violation;

  for (const auto& z : cover.domain().points()) {
    const LatticePoint lhs = cod.projection()(cover(z));
    const LatticePoint rhs = f(dom.projection()(z));
    if (lhs != rhs) {
      cert.commutes = false;
      cert.commuting_violation = z;
      break;
    }
  }
  return cert;
}

namespace {

// Shared state for the exhaustive filler search. Domain points are visited
// in lexicographic order; a candidate value is accepted only if it is equal
// or adjacent to every value already assigned to an adjacent earlier point.
struct Search {
  std::vector<LatticePoint> points;                 // lexicographic
  std::vector<std::vector<std::size_t>> earlier;    // adjacent earlier points
  std::vector<std::vector<LatticePoint>> candidates;  // per point, sorted
};

Search prepare(const FillerQuery& q, const SubdivisionBundle& dom,
               const SubdivisionBundle& cod) {
  Search s;
  s.points = dom.subdivided().points();
  const std::size_t n = s.points.size();
  s.earlier.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& nb : dom.subdivided().neighbours(s.points[i])) {
      const std::size_t j = dom.subdivided().index_of(nb);
      if (j < i) s.earlier[i].push_back(j);
    }
  }
  s.candidates.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (q.fibrewise) {
      const LatticePoint target = q.map(dom.projection()(s.points[i]));
      s.candidates[i] = cod.fiber(target).points();
    } else {
      s.candidates[i] = cod.subdivided().points();
    }
  }
  return s;
}

}  // namespace

FillerScan for_each_filler(
    const FillerQuery& q, std::uint64_t budget,
    const std::function<bool(const std::vector<LatticePoint>&)>& visit) {
  if (q.factor_domain < 1 || q.factor_codomain < 1)
    throw std::invalid_argument("subdivision factors must be >= 1");
  const auto dom = subdivide(q.map.domain(), q.factor_domain);
  const auto cod = subdivide(q.map.codomain(), q.factor_codomain);
  const Search s = prepare(q, dom, cod);
  const std::size_t n = s.points.size();

  FillerScan scan;
  std::vector<LatticePoint> assigned(n);
  std::vector<std::size_t> choice(n, 0);

  std::size_t depth = 0;
  while (true) {
    if (choice[depth] == s.candidates[depth].size()) {
      // Exhausted this level; backtrack.
      choice[depth] = 0;
      if (depth == 0) break;
      --depth;
      ++choice[depth];
      continue;
    }
    if (scan.evaluations >= budget) {
      scan.status = FillerEnumeration::Status::budget_exceeded;
      return scan;
    }
    ++scan.evaluations;
    const LatticePoint& value = s.candidates[depth][choice[depth]];
    bool ok = true;
    for (std::size_t j : s.earlier[depth]) {
      if (!adjacent_or_equal(value, assigned[j])) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++choice[depth];
      continue;
    }
    assigned[depth] = value;
    if (depth + 1 == n) {
      ++scan.total_count;
      if (!visit(assigned)) {
        scan.stopped_early = true;
        return scan;
      }
      ++choice[depth];
    } else {
      ++depth;
    }
  }
  return scan;
}

FillerEnumeration enumerate_fillers(const FillerQuery& q, std::size_t limit,
                                    std::uint64_t budget) {
  const auto dom = subdivide(q.map.domain(), q.factor_domain);
  const auto cod = subdivide(q.map.codomain(), q.factor_codomain);
  FillerEnumeration result;
  const auto scan = for_each_filler(
      q, budget, [&](const std::vector<LatticePoint>& values) {
        if (result.fillers.size() < limit)
          result.fillers.emplace_back(dom.subdivided(), cod.subdivided(),
                                      values);
        else
          result.truncated = true;
        return true;
      });
  result.status = scan.status;
  result.total_count = scan.total_count;
  result.evaluations = scan.evaluations;
  if (result.status == FillerEnumeration::Status::budget_exceeded) {
    result.fillers.clear();
    result.truncated = false;
    result.total_count = 0;
  }
  return result;
}

bool contains_filler(const FillerQuery& q, const DigitalMap& candidate) {
  const auto dom = subdivide(q.map.domain(), q.factor_domain);
  const auto cod = subdivide(q.map.codomain(), q.factor_codomain);
  if (candidate.domain() != dom.subdivided() ||
      candidate.codomain() != cod.subdivided())
    throw std::invalid_argument("contains_filler: shape mismatch");
  const Search s = prepare(q, dom, cod);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const LatticePoint& value = candidate(s.points[i]);
    if (!std::binary_search(s.candidates[i].begin(), s.candidates[i].end(),
                            value))
      return false;
    for (std::size_t j : s.earlier[i]) {
      if (!adjacent_or_equal(value, candidate(s.points[j]))) return false;
    }
  }
  return true;
}

}  // namespace digitop
