#include <doctest.h>

#include "digitop/cover1d.hpp"
#include "digitop/cover2d.hpp"
#include "digitop/oracle.hpp"
#include "testutil.hpp"

using namespace digitop;

namespace {

// Independent generate-and-test enumeration: every assignment of codomain
// fiber points to domain points, filtered by continuity. Only usable on very
// small instances; used to cross-check the backtracking search.
std::vector<DigitalMap> brute_force_fillers(const FillerQuery& q) {
  const auto dom = subdivide(q.map.domain(), q.factor_domain);
  const auto cod = subdivide(q.map.codomain(), q.factor_codomain);
  const auto& pts = dom.subdivided().points();
  std::vector<std::vector<LatticePoint>> candidates;
  for (const auto& z : pts) {
    if (q.fibrewise)
      candidates.push_back(cod.fiber(q.map(dom.projection()(z))).points());
    else
      candidates.push_back(cod.subdivided().points());
  }
  std::vector<DigitalMap> out;
  std::vector<std::size_t> choice(pts.size(), 0);
  for (;;) {
    std::vector<LatticePoint> values;
    for (std::size_t i = 0; i < pts.size(); ++i)
      values.push_back(candidates[i][choice[i]]);
    DigitalMap candidate(dom.subdivided(), cod.subdivided(), values);
    if (is_continuous(candidate).continuous) out.push_back(std::move(candidate));
    std::size_t i = pts.size();
    while (i > 0 && ++choice[i - 1] == candidates[i - 1].size())
      choice[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("certificates report continuity and commuting violations") {
  const auto swap = testutil::swap_map();
  const auto covered = cover_path_odd(testutil::swap_path(), 1).as_map();
  const auto good = verify_cover(swap, covered, 3, 3);
  CHECK(good.pass());

  const auto c = DigitalMap::constant(interval(1), single_point(pt(0)), pt(0));
  const auto naive = testutil::naive_cover(c, 3);
  const auto bad = verify_cover(c, naive, 3, 3);
  CHECK_FALSE(bad.continuous);
  CHECK(bad.continuity_violation == std::make_pair(pt(2), pt(3)));
  CHECK(bad.commutes);  // blockwise transport commutes by construction

  // A constant candidate misses the fiber over 0 for the swap map.
  const auto sub6 = subdivide(interval(1), 3).subdivided();
  const auto skewed = DigitalMap::constant(sub6, sub6, pt(0));
  const auto cert = verify_cover(swap, skewed, 3, 3);
  CHECK(cert.continuous);
  CHECK_FALSE(cert.commutes);
  CHECK(cert.commuting_violation == pt(0));

  CHECK_THROWS_AS(verify_cover(c, covered, 3, 3), std::invalid_argument);
}

TEST_CASE("randomized 2d covers pass verification") {
  testutil::Rng rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    const auto x = testutil::random_image(rng, 2, 6, 2);
    const auto y = testutil::random_image(rng, 2, 4, 2);
    const auto f = testutil::random_continuous_map(rng, x, y);
    const auto covered = cover_2d(f, 1);
    CHECK(verify_cover(f, covered, 3, 3).pass());
  }
}

TEST_CASE("filler enumeration finds the standard cover of the swap map") {
  const FillerQuery q{testutil::swap_map(), 3, 3, true};
  const auto result = enumerate_fillers(q, 1 << 20);
  CHECK(result.status == FillerEnumeration::Status::complete);
  CHECK(result.total_count > 0);
  CHECK_FALSE(result.truncated);
  const auto standard = cover_path_odd(testutil::swap_path(), 1).as_map();
  bool found = false;
  for (const auto& filler : result.fillers)
    if (same_table(filler, standard)) found = true;
  CHECK(found);
  CHECK(contains_filler(q, standard));

  // Everything returned is a genuine cover, and the order is lexicographic.
  for (const auto& filler : result.fillers)
    CHECK(verify_cover(q.map, filler, 3, 3).pass());
  for (std::size_t i = 1; i < result.fillers.size(); ++i)
    CHECK(result.fillers[i - 1].values() < result.fillers[i].values());
}

TEST_CASE("constant maps admit fillers at any factor") {
  const auto c = DigitalMap::constant(interval(1), single_point(pt(0)), pt(0));
  const auto result = enumerate_fillers({c, 3, 3, true}, 4);
  CHECK(result.status == FillerEnumeration::Status::complete);
  CHECK(result.total_count > 0);
}

TEST_CASE("collapsed L-shape admits fillers at factor two") {
  const FillerQuery q{testutil::l_shape_collapse(), 2, 2, true};
  const auto result = enumerate_fillers(q, 4, 500'000'000ull);
  CHECK(result.status == FillerEnumeration::Status::complete);
  CHECK(result.total_count > 0);
}

TEST_CASE("backtracking search matches generate-and-test on tiny instances") {
  testutil::Rng rng(73);
  for (int trial = 0; trial < 12; ++trial) {
    const auto x = testutil::random_image(rng, 1, 2, 1);
    const auto y = testutil::random_image(rng, 1, 2, 1);
    const auto f = testutil::random_continuous_map(rng, x, y);
    const FillerQuery q{f, 2, 2, true};
    const auto fast = enumerate_fillers(q, 1 << 20);
    REQUIRE(fast.status == FillerEnumeration::Status::complete);
    const auto slow = brute_force_fillers(q);
    REQUIRE(fast.total_count == slow.size());
    for (std::size_t i = 0; i < slow.size(); ++i)
      CHECK(same_table(fast.fillers[i], slow[i]));
  }
}

TEST_CASE("budget overruns are explicit, not truncated lists") {
  const FillerQuery q{testutil::swap_map(), 3, 3, true};
  const auto result = enumerate_fillers(q, 1 << 20, 10);
  CHECK(result.status == FillerEnumeration::Status::budget_exceeded);
  CHECK(result.fillers.empty());
  CHECK(result.evaluations <= 10);
}

TEST_CASE("membership check rejects non-fillers") {
  const FillerQuery q{testutil::swap_map(), 3, 3, true};
  const auto wrong = DigitalMap::constant(subdivide(interval(1), 3).subdivided(),
                                          subdivide(interval(1), 3).subdivided(),
                                          pt(0));
  CHECK_FALSE(contains_filler(q, wrong));  // not fibrewise over 0
  const auto naive = testutil::naive_cover(testutil::swap_map(), 3);
  CHECK_FALSE(contains_filler(q, naive));  // fibrewise but discontinuous
}

TEST_CASE("probe: continuous planar maps with tiny images at factor two") {
  // Sweep all continuous maps between normalized plane images with at most
  // three domain points inside a 2x2 window and at most two codomain points;
  // every one of them admits a filler at factor 2. Recorded as a fixture:
  // no counterexample exists in this family.
  std::vector<DigitalImage> domains;
  const std::vector<LatticePoint> window = {pt(0, 0), pt(0, 1), pt(1, 0),
                                            pt(1, 1)};
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<LatticePoint> pts;
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) pts.push_back(window[static_cast<std::size_t>(i)]);
    if (pts.size() > 3) continue;
    bool has_origin = false;
    for (const auto& p : pts) has_origin |= p == pt(0, 0);
    if (!has_origin) continue;  // normalize translates away duplicates
    domains.emplace_back(2, pts);
  }
  std::vector<DigitalImage> codomains = {
      DigitalImage(2, {pt(0, 0)}),
      DigitalImage(2, {pt(0, 0), pt(1, 0)}),
      DigitalImage(2, {pt(0, 0), pt(0, 1)}),
      DigitalImage(2, {pt(0, 0), pt(1, 1)})};

  int checked = 0;
  for (const auto& x : domains) {
    for (const auto& y : codomains) {
      // Odometer over all tables, keep the continuous ones.
      std::vector<std::size_t> choice(x.size(), 0);
      for (;;) {
        std::vector<LatticePoint> values;
        for (std::size_t i = 0; i < x.size(); ++i)
          values.push_back(y.points()[choice[i]]);
        DigitalMap f(x, y, values);
        if (is_continuous(f).continuous) {
          const auto result = enumerate_fillers({f, 2, 2, true}, 1, 200'000'000ull);
          REQUIRE(result.status == FillerEnumeration::Status::complete);
          CHECK(result.total_count > 0);
          ++checked;
        }
        std::size_t i = x.size();
        while (i > 0 && ++choice[i - 1] == y.size()) choice[--i] = 0;
        if (i == 0) break;
      }
    }
  }
  CHECK(checked > 50);
}
