#include <doctest.h>

#include "digitop/cover1d.hpp"
#include "digitop/oracle.hpp"
#include "testutil.hpp"

using namespace digitop;

namespace {

// Checks the covering square, fibrewise containment and centre-to-centre
// behaviour of an odd-factor standard cover.
void check_standard_cover(const DigitalPath& path, const DigitalPath& covered,
                          int k) {
  const int m = 2 * k + 1;
  const auto cert = verify_cover(path.as_map(), covered.as_map(), m, m);
  CHECK(cert.continuous);
  CHECK(cert.commutes);
  const auto target_bundle = subdivide(path.target(), m);
  for (int i = 0; i <= path.length(); ++i) {
    CHECK(covered.at(m * i + k) == fiber_centre(path.at(i), m));
    for (int r = 0; r <= m - 1; ++r)
      CHECK(target_bundle.fiber(path.at(i)).contains(covered.at(m * i + r)));
  }
}

}  // namespace

TEST_CASE("path construction checks continuity and membership") {
  CHECK_THROWS_AS(DigitalPath(interval(2), {pt(0), pt(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DigitalPath(interval(2), {pt(0), pt(5)}),
                  std::invalid_argument);
  const DigitalPath p(diamond(), {pt(1, 0), pt(0, 1)});
  CHECK(p.length() == 1);
  CHECK_FALSE(p.is_loop());
}

TEST_CASE("standard cover of the swap map at factor three") {
  const auto covered = cover_path_odd(testutil::swap_path(), 1);
  REQUIRE(covered.length() == 5);
  const std::vector<LatticePoint> expected = {pt(4), pt(4), pt(3),
                                              pt(2), pt(1), pt(1)};
  CHECK(covered.values() == expected);
  check_standard_cover(testutil::swap_path(), covered, 1);
}

TEST_CASE("standard cover of a constant path is constant at the centre") {
  for (int k = 1; k <= 3; ++k) {
    const int n = 3;
    const DigitalPath constant(diamond(),
                               std::vector<LatticePoint>(n + 1, pt(0, -1)));
    const auto covered = cover_path_odd(constant, k);
    CHECK(covered.length() == (2 * k + 1) * n + 2 * k);
    const LatticePoint centre = fiber_centre(pt(0, -1), 2 * k + 1);
    for (const auto& v : covered.values()) CHECK(v == centre);
  }
}

TEST_CASE("standard cover of the identity path clamps into the centres") {
  // The construction holds the end segments constant, so the cover of the
  // identity is the identity away from the ends and clamps to the first and
  // last centres on them.
  const int n = 2, k = 2, m = 2 * k + 1;
  const auto id_path = DigitalPath(
      interval(n), {pt(0), pt(1), pt(2)});
  const auto covered = cover_path_odd(id_path, k);
  for (int j = 0; j <= n * m + 2 * k; ++j) {
    const int expected = std::clamp(j, k, n * m + k);
    CHECK(covered.at(j) == pt(expected));
  }
  check_standard_cover(id_path, covered, k);
}

TEST_CASE("a single-point path covers to a constant of length 2k") {
  const DigitalPath point_path(diamond(), {pt(1, 0)});
  const auto covered = cover_path_odd(point_path, 2);
  CHECK(covered.length() == 4);
  for (const auto& v : covered.values()) CHECK(v == fiber_centre(pt(1, 0), 5));
}

TEST_CASE("interpolation agrees with the centre-offset form") {
  testutil::Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto y = testutil::random_image(rng, testutil::rand_int(rng, 1, 3),
                                          6, 2);
    const int n = testutil::rand_int(rng, 1, 5);
    const int k = testutil::rand_int(rng, 1, 3);
    const int m = 2 * k + 1;
    const auto path = testutil::random_path(rng, y, n);
    const auto covered = cover_path_odd(path, k);
    for (int i = 0; i < n; ++i) {
      const int centre = m * i + k;
      for (int t = 0; t <= 2 * k; ++t) {
        const LatticePoint expected =
            add(fiber_centre(path.at(i), m),
                scale(t, sub(path.at(i + 1), path.at(i))));
        CHECK(covered.at(centre + t) == expected);
      }
    }
  }
}

TEST_CASE("randomized standard covers satisfy all covering properties") {
  testutil::Rng rng(37);
  for (int trial = 0; trial < 120; ++trial) {
    const int dim = testutil::rand_int(rng, 1, 3);
    const auto y = testutil::random_image(rng, dim, 7, 2);
    const int n = testutil::rand_int(rng, 0, 8);
    const int k = testutil::rand_int(rng, 1, 3);
    const auto path = testutil::random_path(rng, y, n);
    check_standard_cover(path, cover_path_odd(path, k), k);
  }
}

TEST_CASE("even and odd composite covers commute with the projections") {
  const auto constant = DigitalPath(diamond(),
                                    std::vector<LatticePoint>(3, pt(1, 0)));
  const auto f2 = cover_path_any(constant, 2);
  const auto down = partial_projection(diamond(), 3);
  const LatticePoint expected = down(fiber_centre(pt(1, 0), 3));
  for (const auto& v : f2.values()) CHECK(v == expected);

  // Swap path, even branch: exhaustive commuting check.
  const auto swap_cover = cover_path_any(testutil::swap_path(), 2);
  const auto cert = verify_cover(testutil::swap_path().as_map(), swap_cover,
                                 3, 2);
  CHECK(cert.pass());

  testutil::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto y = testutil::random_image(rng, 2, 6, 2);
    const auto path = testutil::random_path(rng, y, testutil::rand_int(rng, 0, 5));
    for (int k = 2; k <= 4; ++k) {
      const auto cover = cover_path_any(path, k);
      CHECK(verify_cover(path.as_map(), cover, k + 1, k).pass());
    }
  }
  CHECK_THROWS_AS(cover_path_any(constant, 1), std::invalid_argument);
}

TEST_CASE("odd composite cover is the weaker factored route") {
  // For odd k the result deliberately factors through the partial
  // projection of the domain rather than repeating the direct cover.
  const auto path = testutil::swap_path();
  const int k = 3;
  const auto composite = cover_path_any(path, k);
  const auto direct = cover_path_odd(path, (k - 1) / 2).as_map();
  const auto through = compose(direct, partial_projection(interval(1), k + 1));
  CHECK(same_table(composite, through));
}

TEST_CASE("loop covers keep the basepoint fiber and can be retargeted") {
  const std::vector<LatticePoint> around = {pt(1, 0), pt(0, 1), pt(-1, 0),
                                            pt(0, -1), pt(1, 0)};
  const DigitalPath loop(diamond(), around);

  SUBCASE("constant loop stays constant") {
    const DigitalPath constant(diamond(),
                               std::vector<LatticePoint>(4, pt(0, 1)));
    const auto covered = cover_loop(constant, 3);
    for (const auto& v : covered.values())
      CHECK(v == fiber_centre(pt(0, 1), 3));
  }

  SUBCASE("odd factor around the diamond") {
    const auto covered = cover_loop(loop, 3);
    CHECK(covered.length() == 4 * 3 + 2);
    CHECK(covered.is_loop());
    CHECK(verify_cover(loop.as_map(), covered.as_map(), 3, 3).pass());
    CHECK(covered.at(0) == fiber_centre(pt(1, 0), 3));
  }

  SUBCASE("even factor around the diamond") {
    const auto covered = cover_loop(loop, 4);
    CHECK(covered.length() == 4 * 5 + 4);
    CHECK(covered.is_loop());
    CHECK(verify_cover(loop.as_map(), covered.as_map(), 5, 4).pass());
  }

  SUBCASE("retargeting moves both endpoints to the base") {
    const auto covered = cover_loop(loop, 3, pt(3, 0));
    CHECK(covered.at(0) == pt(3, 0));
    CHECK(covered.at(covered.length()) == pt(3, 0));
    CHECK(verify_cover(loop.as_map(), covered.as_map(), 3, 3).pass());

    // Every base point of the fiber works, for even factors too.
    const auto bundle = subdivide(diamond(), 4);
    for (const auto& base : bundle.fiber(pt(1, 0)).points()) {
      const auto retargeted = cover_loop(loop, 4, base);
      CHECK(retargeted.at(0) == base);
      CHECK(retargeted.at(retargeted.length()) == base);
      CHECK(verify_cover(loop.as_map(), retargeted.as_map(), 5, 4).pass());
    }
  }

  SUBCASE("base outside the fiber is rejected") {
    CHECK_THROWS_AS(cover_loop(loop, 3, pt(0, 0)), std::invalid_argument);
  }

  SUBCASE("non-loops are rejected") {
    CHECK_THROWS_AS(cover_loop(DigitalPath(diamond(), {pt(1, 0), pt(0, 1)}), 3),
                    std::invalid_argument);
  }
}
