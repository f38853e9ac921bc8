#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skeinpos/diagram.hpp"
#include "skeinpos/errors.hpp"
#include "skeinpos/skein.hpp"

using namespace skeinpos;

namespace {

std::vector<Diagram> builder_zoo() {
  std::vector<Diagram> zoo;
  for (int k = 0; k <= 4; ++k) zoo.push_back(build_core_stack(k));
  for (int k = 0; k <= 5; ++k) zoo.push_back(build_theta_over_cores(k));
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n) zoo.push_back(build_xk_yn(k, n));
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) zoo.push_back(build_zkn(k, n));
  zoo.push_back(build_d1_xy());
  zoo.push_back(build_kink(Sign::Positive));
  zoo.push_back(build_kink(Sign::Negative));
  return zoo;
}

Diagram all_negative(Diagram d) {
  while (!d.crossingless()) d = resolve_crossing(d, d.crossings.front().id, Sign::Negative);
  return d;
}

}  // namespace

TEST_CASE("every builder output is valid") {
  for (const auto& d : builder_zoo()) CHECK_NOTHROW(validate(d));
}

TEST_CASE("core stacks") {
  CHECK(build_core_stack(0).loops.empty());
  CHECK(build_core_stack(0).edges.empty());
  const Diagram one = build_core_stack(1);
  CHECK(one.crossingless());
  REQUIRE(one.loops.size() == 1);
  CHECK(one.loops[0] == 1);
  CHECK(build_core_stack(3).loops.size() == 3);
  CHECK(build_core_stack(3).crossingless());
}

TEST_CASE("theta over cores") {
  CHECK(build_theta_over_cores(0).crossingless());
  CHECK(build_theta_over_cores(0).surface.kind == SurfaceModel::Kind::MarkedAnnulus);
  CHECK(build_theta_over_cores(1).crossing_count() == 1);
  CHECK(build_theta_over_cores(2).crossing_count() == 2);
}

TEST_CASE("D_n layout") {
  const SurfaceModel d2 = disk_dn(2);
  CHECK(d2.points == std::vector<std::string>{"p0", "p1", "p2", "p3", "q2", "q1"});
  CHECK(d2.adjacent(0, 1));
  CHECK(d2.adjacent(5, 0));
  CHECK_FALSE(d2.adjacent(1, 5));
  CHECK(build_xk_yn(1, 1).surface.point_count() == 4);
  CHECK(build_xk_yn(1, 1).crossing_count() == 1);
  CHECK(build_xk_yn(1, 2).crossing_count() == 2);
  CHECK(build_xk_yn(2, 5).crossing_count() == 10);
  CHECK(build_xk_yn(3, 2).crossing_count() == 6);
  CHECK_THROWS_AS(build_xk_yn(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_zkn(3, 2), std::invalid_argument);
}

TEST_CASE("d1 xy") {
  const Diagram d = build_d1_xy();
  CHECK(d.crossing_count() == 1);
  CHECK(d.surface.point_count() == 4);
  const Diagram s = resolve_crossing(d, d.crossings.front().id, Sign::Positive);
  CHECK(classify_components(s).arcs.size() == 2);
}

TEST_CASE("z_{k,n} is the all-negative smoothing of x^k y_n") {
  CHECK(build_zkn(1, 1).crossingless());
  CHECK(build_zkn(1, 2).crossingless());
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      CAPTURE(k);
      CAPTURE(n);
      const auto direct = normal_form(build_zkn(k, n));
      const auto folded = normal_form(all_negative(build_xk_yn(k, n)));
      REQUIRE(direct.has_value());
      REQUIRE(folded.has_value());
      CHECK(*direct == *folded);
      CHECK(direct->coeff == LaurentPoly(1));
    }
  }
}

TEST_CASE("kinks") {
  for (Sign s : {Sign::Positive, Sign::Negative}) {
    const Diagram k = build_kink(s);
    CHECK(k.crossing_count() == 1);
    CHECK(k.surface.kind == SurfaceModel::Kind::Disk);
    CHECK(resolve_crossing(k, k.crossings.front().id, Sign::Positive).crossingless());
  }
  CHECK(build_kink(Sign::Positive).crossings[0].over != build_kink(Sign::Negative).crossings[0].over);
  const Diagram plus = build_kink(Sign::Positive);
  CHECK(resolve_crossing(plus, 0, Sign::Positive).loops.size() == 2);
  CHECK(resolve_crossing(plus, 0, Sign::Negative).loops.size() == 1);
}

TEST_CASE("positive smoothing of theta over one core gives theta_1") {
  const Diagram d = build_theta_over_cores(1);
  const Classification c = classify_components(resolve_crossing(d, d.crossings.front().id, Sign::Positive));
  REQUIRE(c.arcs.size() == 1);
  CHECK(c.loops.empty());
  CHECK(c.arcs[0].winding == 1);
}

TEST_CASE("smoothing pairs") {
  using P = std::pair<int, int>;
  auto pos = smoothing_pairs(OverPair::Even, Sign::Positive);
  CHECK(pos[0] == P{0, 1});
  CHECK(pos[1] == P{2, 3});
  // The two smoothings of a crossing are the two non-straight pairings.
  for (OverPair o : {OverPair::Even, OverPair::Odd}) {
    auto a = smoothing_pairs(o, Sign::Positive), b = smoothing_pairs(o, Sign::Negative);
    for (const auto& [x, y] : a)
      for (const auto& [u, v] : b) CHECK(!((x == u && y == v) || (x == v && y == u)));
    CHECK(smoothing_pairs(o == OverPair::Even ? OverPair::Odd : OverPair::Even, Sign::Positive) == b);
  }
}

TEST_CASE("resolve_crossing drops one crossing and keeps the diagram valid") {
  std::mt19937_64 rng(31);
  for (const auto& start : builder_zoo()) {
    for (int trial = 0; trial < 5; ++trial) {
      Diagram d = start;
      while (!d.crossingless()) {
        std::uniform_int_distribution<std::size_t> pick(0, d.crossings.size() - 1);
        const int id = d.crossings[pick(rng)].id;
        const Sign s = rng() % 2 ? Sign::Positive : Sign::Negative;
        const std::size_t before = d.crossing_count();
        d = resolve_crossing(d, id, s);
        CHECK(d.crossing_count() == before - 1);
        CHECK(d.find_crossing(id) == nullptr);
        CHECK_NOTHROW(validate(d));
      }
    }
  }
  CHECK_THROWS_AS(resolve_crossing(build_kink(Sign::Positive), 7, Sign::Positive), std::invalid_argument);
}

TEST_CASE("validate rejects broken diagrams") {
  Diagram d = build_xk_yn(1, 1);
  d.edges.pop_back();
  CHECK_THROWS_AS(validate(d), StructureError);

  Diagram seam = build_d1_xy();
  seam.edges[0].seam = 1;
  CHECK_THROWS_AS(validate(seam), StructureError);

  Diagram dup = build_xk_yn(1, 2);
  dup.crossings[1].id = dup.crossings[0].id;
  CHECK_THROWS_AS(validate(dup), StructureError);
}

TEST_CASE("diagram JSON") {
  const auto j = to_json(build_xk_yn(1, 2));
  CHECK(j["surface"]["kind"] == "disk");
  CHECK(j["crossings"].size() == 2);
}
