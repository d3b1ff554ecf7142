#include <doctest.h>

#include "digitop/homotopy.hpp"
#include "testutil.hpp"

using namespace digitop;

namespace {

Homotopy wiggle_homotopy() {
  // Slides the middle of the out-and-back path (1,0),(0,1),(1,0) in the
  // diamond onto the basepoint across one stage.
  const auto d = diamond();
  return Homotopy(interval(2), 1, d, [](const LatticePoint& x, int t) {
    if (x[0] == 1 && t == 0) return pt(0, 1);
    return pt(1, 0);
  });
}

}  // namespace

TEST_CASE("homotopy construction checks continuity and stage count") {
  const auto f = DigitalMap::identity(interval(1));
  CHECK_THROWS_AS(constant_homotopy(f, 0), std::invalid_argument);
  // A jump between stages is rejected.
  CHECK_THROWS_AS(Homotopy(interval(0), 1, interval(2),
                           [](const LatticePoint&, int t) {
                             return t == 0 ? pt(0) : pt(2);
                           }),
                  std::invalid_argument);
}

TEST_CASE("end-slice recognition") {
  const auto f = DigitalMap::from_pairs(
      interval(2), interval(1),
      {{pt(0), pt(0)}, {pt(1), pt(0)}, {pt(2), pt(1)}});
  const auto g = DigitalMap::constant(interval(2), interval(1), pt(0));

  const auto constant = constant_homotopy(f, 2);
  CHECK(is_homotopy_between(constant, f, f));
  CHECK_FALSE(is_homotopy_between(constant, f, g));

  const Homotopy step(interval(2), 1, interval(1),
                      [&](const LatticePoint& x, int t) {
                        return t == 0 ? f(x) : g(x);
                      });
  CHECK(is_homotopy_between(step, f, g));

  const auto mismatched = DigitalMap::identity(interval(3));
  CHECK_THROWS_AS(is_homotopy_between(step, mismatched, g),
                  std::invalid_argument);
}

TEST_CASE("endpoint-relative recognition") {
  const auto d = diamond();
  const auto constant = constant_homotopy(
      DigitalMap::from_pairs(interval(1), d,
                             {{pt(0), pt(1, 0)}, {pt(1), pt(0, 1)}}),
      2);
  CHECK(is_rel_endpoints(constant));

  CHECK(is_rel_endpoints(wiggle_homotopy()));

  // Moving an endpoint breaks the property.
  const Homotopy slides_start(interval(1), 1, d,
                              [](const LatticePoint& x, int t) {
                                if (x[0] == 1) return pt(0, 1);
                                return t == 0 ? pt(1, 0) : pt(0, 1);
                              });
  CHECK_FALSE(is_rel_endpoints(slides_start));

  const auto not_cylinder = constant_homotopy(DigitalMap::identity(diamond()), 1);
  CHECK_THROWS_AS(is_rel_endpoints(not_cylinder), std::invalid_argument);
}

TEST_CASE("covering a constant homotopy of a diagonal walk stays constant") {
  // Every step of the walk moves both coordinates, so the rectangle cover is
  // exactly the stacked standard cover and all slices agree.
  const DigitalImage y(2, {pt(0, 0), pt(1, 1), pt(2, 0), pt(1, -1)});
  const DigitalPath path(y, {pt(0, 0), pt(1, 1), pt(2, 0), pt(1, -1)});
  const int k = 1, m = 3;
  const auto h = constant_homotopy(path.as_map(), 2);
  const auto covered = cover_homotopy(h, k);
  const auto expected = cover_path_odd(path, k);
  CHECK(covered.stages() == 2 * m + 2 * k);
  for (int t = 0; t <= covered.stages(); ++t)
    CHECK(same_table(covered.slice(t), expected.as_map()));
}

TEST_CASE("every slice of a covered constant homotopy covers the path") {
  // For a general path the interior slices may ride the min contours, but
  // each one still covers the path, and the end slices are the standard
  // cover exactly.
  testutil::Rng rng(61);
  const auto y = testutil::big_circle();
  const auto path = testutil::random_path(rng, y, 4);
  const int k = 1, m = 3;
  const auto h = constant_homotopy(path.as_map(), 2);
  const auto covered = cover_homotopy(h, k);
  const auto expected = cover_path_odd(path, k);
  CHECK(same_table(covered.slice(0), expected.as_map()));
  CHECK(same_table(covered.slice(covered.stages()), expected.as_map()));
  for (int t = 0; t <= covered.stages(); ++t)
    CHECK(verify_cover(path.as_map(), covered.slice(t), m, m).pass());
}

TEST_CASE("covered homotopies connect the covered slices") {
  const auto h = wiggle_homotopy();
  const int k = 1, m = 3;
  const auto covered = cover_homotopy(h, k);

  std::vector<LatticePoint> bottom, top;
  for (int s = 0; s <= 2; ++s) {
    bottom.push_back(h.at(pt(s), 0));
    top.push_back(h.at(pt(s), 1));
  }
  const auto bottom_cover = cover_path_odd(DigitalPath(h.target(), bottom), k);
  const auto top_cover = cover_path_odd(DigitalPath(h.target(), top), k);
  CHECK(same_table(covered.slice(0), bottom_cover.as_map()));
  CHECK(same_table(covered.slice(covered.stages()), top_cover.as_map()));

  CHECK(is_homotopy_between(covered, bottom_cover.as_map(),
                            top_cover.as_map()));
  CHECK(is_rel_endpoints(covered));
  CHECK(covered.at(pt(0), 0) == fiber_centre(pt(1, 0), m));
  CHECK(covered.at(pt(2 * m + 2 * k), 0) == fiber_centre(pt(1, 0), m));
}

TEST_CASE("based loop homotopies cover to based loop homotopies") {
  // Contract the boundary loop of the filled unit square to its basepoint;
  // all values live in a 4-clique so the one-stage homotopy is continuous.
  const auto square = product_image(interval(1), interval(1));
  const Homotopy h(interval(4), 1, square, [](const LatticePoint& x, int t) {
    static const std::vector<LatticePoint> around = {
        pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1), pt(0, 0)};
    return t == 0 ? around[static_cast<std::size_t>(x[0])] : pt(0, 0);
  });
  REQUIRE(is_rel_endpoints(h));
  REQUIRE(h.at(pt(0), 0) == h.at(pt(4), 0));
  const int k = 1, m = 3;
  const auto covered = cover_homotopy(h, k);
  CHECK(is_rel_endpoints(covered));
  const auto base = fiber_centre(pt(0, 0), m);
  for (int t = 0; t <= covered.stages(); ++t) {
    const auto slice = covered.slice(t);
    CHECK(slice(pt(0)) == base);
    CHECK(slice(pt(4 * m + 2 * k)) == base);
  }
}

TEST_CASE("homotopy is reflexive symmetric and stage-transitive") {
  testutil::Rng rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = testutil::random_image(rng, 1, 4, 2);
    const auto y = testutil::random_image(rng, 2, 5, 2);
    const auto f = testutil::random_continuous_map(rng, x, y);

    const auto refl = constant_homotopy(f, 1);
    CHECK(is_homotopy_between(refl, f, f));

    // Walk f to a nearby map through one stage, then reverse and
    // concatenate.
    const auto g = [&] {
      std::vector<LatticePoint> values;
      for (const auto& p : x.points()) values.push_back(f(p));
      return DigitalMap(x, y, values);
    }();
    const Homotopy forward(x, 1, y, [&](const LatticePoint& p, int t) {
      return t == 0 ? f(p) : g(p);
    });
    const auto backward = reverse(forward);
    CHECK(is_homotopy_between(backward, g, f));

    const auto chained = concatenate(forward, backward);
    CHECK(chained.stages() == 2);
    CHECK(is_homotopy_between(chained, f, f));
  }
}
