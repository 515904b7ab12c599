#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "clusterflip/surface.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using cflip::FlipPlan;
using cflip::LaurentPoly;
using cflip::Quiver;
using cflip::Seed;
using cflip::TriangulatedPolygon;
using cflip::testing::check_sequence;
using cflip::testing::golden_map;

namespace {

std::pair<int, int> arrow_histogram(const Quiver& q) {
  int full = 0, half = 0;
  for (int i = 0; i < q.size(); ++i)
    for (int j = i + 1; j < q.size(); ++j) {
      auto w = std::abs(q.w6(i, j));
      if (w == 0) continue;
      if (w == 6) ++full;
      else if (w == 3) ++half;
      else FAIL("unexpected arrow weight " << w);
    }
  return {full, half};
}

int count_frozen(const Quiver& q) {
  int k = 0;
  for (const auto& v : q.vertices()) k += v.frozen ? 1 : 0;
  return k;
}

// The 2-subdivided pentagon A..E (corners 0..4 clockwise) with diagonals
// AC and AD.
TriangulatedPolygon pentagon() {
  TriangulatedPolygon P(5, 2);
  P.set_side(0, 1, {"y1", "y2"});
  P.set_side(1, 2, {"y3", "y4"});
  P.set_side(2, 3, {"y5", "y6"});
  P.set_side(3, 4, {"y7", "y8"});
  P.set_side(4, 0, {"y9", "y10"});
  P.add_diagonal(0, 2, {"x2", "x7"});
  P.add_diagonal(0, 3, {"x1", "x6"});
  P.set_interior(0, 1, 2, 1, 1, 1, "x4");
  P.set_interior(0, 2, 3, 1, 1, 1, "x5");
  P.set_interior(0, 3, 4, 1, 1, 1, "x3");
  return P;
}

std::vector<std::string> flatten(const FlipPlan& plan) {
  std::vector<std::string> out;
  for (const auto& layer : plan) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

}  // namespace

TEST_CASE("subdivided triangle quivers") {
  for (int n : {1, 2, 3, 4}) {
    Quiver q = cflip::build_triangle_quiver(n);
    q.check_invariants();
    CHECK(count_frozen(q) == 3 * n);
    CHECK(q.size() - count_frozen(q) == n * (n - 1) / 2);
    auto [full, half] = arrow_histogram(q);
    CHECK(full == 3 * n * (n + 1) / 2);
    CHECK(half == 3 * (n - 1));
  }
}

TEST_CASE("the 1-subdivided triangle is a full-arrow cycle on the midpoints") {
  Quiver q = cflip::build_triangle_quiver(1);
  REQUIRE(q.size() == 3);
  for (int i = 0; i < 3; ++i) {
    int out = 0, in = 0;
    for (int j = 0; j < 3; ++j) {
      if (q.w6(i, j) == 6) ++out;
      if (q.w6(i, j) == -6) ++in;
    }
    CHECK(out == 1);
    CHECK(in == 1);
  }
}

TEST_CASE("grid labels of the quadrilateral") {
  auto l3 = cflip::quad_grid_labels(3);
  CHECK(l3.at({1, 4}) == "y1");
  CHECK(l3.at({3, 4}) == "y3");
  CHECK(l3.at({4, 3}) == "y4");
  CHECK(l3.at({4, 1}) == "y6");
  CHECK(l3.at({3, 0}) == "y7");
  CHECK(l3.at({0, 1}) == "y10");
  CHECK(l3.at({0, 3}) == "y12");
  CHECK(l3.at({3, 3}) == "x1");
  CHECK(l3.at({2, 2}) == "x2");
  CHECK(l3.at({1, 1}) == "x3");
  CHECK(l3.at({3, 1}) == "x4");
  CHECK(l3.at({1, 3}) == "x5");
  CHECK(l3.at({2, 3}) == "x6");
  CHECK(l3.at({3, 2}) == "x7");
  CHECK(l3.at({2, 1}) == "x8");
  CHECK(l3.at({1, 2}) == "x9");
  CHECK(l3.count({0, 0}) == 0);
  CHECK(l3.count({4, 4}) == 0);

  auto l4 = cflip::quad_grid_labels(4);
  CHECK(l4.at({4, 4}) == "x1");
  CHECK(l4.at({1, 1}) == "x4");
  CHECK(l4.at({4, 1}) == "x5");
  CHECK(l4.at({3, 2}) == "x6");
  CHECK(l4.at({2, 3}) == "x7");
  CHECK(l4.at({1, 4}) == "x8");
  CHECK(l4.at({2, 4}) == "x9");
  CHECK(l4.at({3, 4}) == "x10");
  CHECK(l4.at({4, 3}) == "x11");
  CHECK(l4.at({4, 2}) == "x12");
  CHECK(l4.at({3, 1}) == "x13");
  CHECK(l4.at({2, 1}) == "x14");
  CHECK(l4.at({1, 2}) == "x15");
  CHECK(l4.at({1, 3}) == "x16");
  CHECK(l4.size() == 4 * 4 + 16);
}

TEST_CASE("quadrilateral quiver shape") {
  for (int n : {1, 2, 3, 4}) {
    auto P = cflip::quad_pattern(n);
    Quiver q = P.quiver();
    q.check_invariants();
    CHECK(count_frozen(q) == 4 * n);
    CHECK(q.size() == n * n + 4 * n);
    std::vector<std::string> diag;
    for (int i = 1; i <= n; ++i) diag.push_back("x" + std::to_string(i));
    CHECK(P.edge_points(0, 2) == diag);
  }
}

TEST_CASE("flip plans of the quadrilateral") {
  CHECK(cflip::flip_plan(2) == FlipPlan{{"x1", "x2"}, {"x3", "x4"}});
  CHECK(cflip::flip_plan(3) ==
        FlipPlan{{"x1", "x2", "x3"}, {"x6", "x7", "x8", "x9"}, {"x2", "x4", "x5"}});
  FlipPlan p7 = cflip::flip_plan(7);
  std::vector<std::size_t> sizes;
  for (const auto& layer : p7) sizes.push_back(layer.size());
  CHECK(sizes == std::vector<std::size_t>{7, 12, 15, 16, 15, 12, 7});
  for (int n = 1; n <= 7; ++n) {
    FlipPlan plan = cflip::flip_plan(n);
    REQUIRE(plan.size() == static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
      CHECK(plan[k - 1].size() == static_cast<std::size_t>(k * (n + 1 - k)));
  }
}

TEST_CASE("each grid vertex is mutated by its distance to the boundary") {
  const int n = 5;
  auto lab = cflip::quad_grid_labels(n);
  std::map<std::string, int> times;
  for (const auto& id : flatten(cflip::flip_plan(n))) times[id] += 1;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      int want = std::min(std::min(x, y), std::min(n + 1 - x, n + 1 - y));
      CHECK(times[lab.at({x, y})] == want);
    }
}

TEST_CASE("polygon flip of the quadrilateral matches the grid plan") {
  for (int n : {1, 2, 3, 4}) {
    auto P = cflip::quad_pattern(n);
    CHECK(P.flip(0, 2) == cflip::flip_plan(n));
    std::vector<std::string> want = cflip::subsquare_result_ids(n, 0, n + 1);
    CHECK(P.edge_points(1, 3) == want);
  }
}

TEST_CASE("sub-square flip plans inside the 4-subdivided quadrilateral") {
  CHECK(cflip::subsquare_flip_plan(4, 1, 4) == FlipPlan{{"x2", "x3"}, {"x6", "x7"}});
  CHECK(cflip::subsquare_result_ids(4, 1, 4) ==
        std::vector<std::string>{"x6", "x7"});
  CHECK(cflip::subsquare_flip_plan(4, 1, 5) ==
        FlipPlan{{"x1", "x2", "x3"}, {"x6", "x7", "x10", "x11"}, {"x2", "x9", "x12"}});
  CHECK(cflip::subsquare_result_ids(4, 1, 5) ==
        std::vector<std::string>{"x12", "x2", "x9"});
  CHECK(cflip::subsquare_flip_plan(4, 0, 4) ==
        FlipPlan{{"x2", "x3", "x4"}, {"x6", "x7", "x14", "x15"}, {"x3", "x13", "x16"}});
  CHECK(cflip::subsquare_result_ids(4, 0, 4) ==
        std::vector<std::string>{"x13", "x3", "x16"});
}

TEST_CASE("flipped values of the 4-subdivided quadrilateral match the records") {
  auto want = golden_map("quad_n4.txt");
  auto run = [&](const FlipPlan& plan, const std::vector<std::string>& ids) {
    Seed s = cflip::build_quadrilateral(4).seed.run_layers(plan);
    for (const auto& id : ids) {
      auto it = want.find({id, s.mutation_count(id)});
      REQUIRE(it != want.end());
      CHECK(s.value(id) == it->second);
    }
  };
  run(cflip::flip_plan(4), cflip::subsquare_result_ids(4, 0, 5));
  run(cflip::subsquare_flip_plan(4, 1, 4), cflip::subsquare_result_ids(4, 1, 4));
  run(cflip::subsquare_flip_plan(4, 1, 5), cflip::subsquare_result_ids(4, 1, 5));
  run(cflip::subsquare_flip_plan(4, 0, 4), cflip::subsquare_result_ids(4, 0, 4));
}

TEST_CASE("upsilon of the smallest quadrilaterals") {
  auto u1 = cflip::upsilon(1);
  REQUIRE(u1.size() == 1);
  CHECK(u1[0] == LaurentPoly::parse("x1^-1*y1*y3 + x1^-1*y2*y4"));

  auto want = golden_map("quad_n2.txt");
  auto u2 = cflip::upsilon(2);
  REQUIRE(u2.size() == 2);
  CHECK(u2[0] == want.at({"x3", 1}));
  CHECK(u2[1] == want.at({"x4", 1}));
}

TEST_CASE("upsilon term counts at all-ones") {
  for (int n = 1; n <= 5; ++n) {
    auto u = cflip::upsilon(n);
    REQUIRE(u.size() == static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) {
      mpz_class want = mpz_class(1) << (t * (n + 1 - t));
      CHECK(u[t - 1].sum_coeffs() == want);
      CHECK(u[t - 1].num_terms() == want);
    }
  }
}

TEST_CASE("pentagon flips: plans, values, and path independence") {
  auto P1 = pentagon();
  Seed s1 = P1.initial_seed();
  FlipPlan m1a = P1.flip(0, 2);
  CHECK(m1a == FlipPlan{{"x2", "x7"}, {"x4", "x5"}});
  FlipPlan m1b = P1.flip(0, 3);
  CHECK(m1b == FlipPlan{{"x1", "x6"}, {"x2", "x3"}});
  Seed e1 = check_sequence(s1, {"x2", "x7", "x4", "x5", "x1", "x6", "x3", "x2"},
                           "pentagon_mu1.txt");
  CHECK(e1 == s1.run_layers(m1a).run_layers(m1b));
  CHECK(P1.edge_points(1, 4) == std::vector<std::string>{"x2", "x3"});

  auto P2 = pentagon();
  Seed s2 = P2.initial_seed();
  FlipPlan m2a = P2.flip(0, 3);
  CHECK(m2a == FlipPlan{{"x1", "x6"}, {"x3", "x5"}});
  FlipPlan m2b = P2.flip(0, 2);
  CHECK(m2b == FlipPlan{{"x2", "x7"}, {"x1", "x4"}});
  Seed e2 = check_sequence(s2, {"x1", "x6", "x3", "x5", "x2", "x7", "x4", "x1"},
                           "pentagon_mu2.txt");
  CHECK(e2 == s2.run_layers(m2a).run_layers(m2b));
  CHECK(P2.edge_points(1, 4) == std::vector<std::string>{"x4", "x1"});

  CHECK(e1.value("x3") == e2.value("x1"));
  CHECK(e1.value("x2") == e2.value("x4"));
  CHECK(e1.mutation_count("x3") == 1);
  CHECK(e2.mutation_count("x1") == 2);
}

TEST_CASE("pentagon faces track the flips") {
  auto P = pentagon();
  using Tri = std::array<int, 3>;
  CHECK(P.faces() == std::vector<Tri>{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
  P.flip(0, 2);
  CHECK(P.faces() == std::vector<Tri>{{0, 1, 3}, {0, 3, 4}, {1, 2, 3}});
  CHECK(P.has_diagonal(1, 3));
  CHECK_FALSE(P.has_diagonal(0, 2));
  P.flip(0, 3);
  CHECK(P.faces() == std::vector<Tri>{{0, 1, 4}, {1, 2, 3}, {1, 3, 4}});
}

TEST_CASE("mutated quiver matches the flipped triangulation's quiver") {
  using cflip::testing::quivers_equal_mutable_part;
  for (int n : {1, 2, 3}) {
    auto P = cflip::quad_pattern(n);
    Seed s = P.initial_seed();
    s = s.run_layers(P.flip(0, 2));
    CHECK(quivers_equal_mutable_part(s.quiver(), P.quiver()));
  }
  auto P = pentagon();
  Seed s = P.initial_seed();
  s = s.run_layers(P.flip(0, 2));
  CHECK(quivers_equal_mutable_part(s.quiver(), P.quiver()));
  s = s.run_layers(P.flip(0, 3));
  CHECK(quivers_equal_mutable_part(s.quiver(), P.quiver()));
}

TEST_CASE("a flip run backwards restores the seed") {
  for (int n : {2, 3}) {
    Seed s = cflip::build_quadrilateral(n).seed;
    FlipPlan plan = cflip::flip_plan(n);
    FlipPlan back(plan.rbegin(), plan.rend());
    CHECK(s.run_layers(plan).run_layers(back) == s);
  }
}

TEST_CASE("triangulation bookkeeping refuses bad input") {
  auto P = pentagon();
  CHECK_THROWS_AS(P.flip(0, 1), cflip::UnknownDiagonal);
  CHECK_THROWS_AS(P.flip(1, 3), cflip::UnknownDiagonal);
  TriangulatedPolygon Q(4, 1);
  CHECK_THROWS_AS(Q.add_diagonal(0, 1, {"x1"}), std::invalid_argument);
  CHECK_THROWS_AS(Q.set_side(0, 2, {"x1"}), std::invalid_argument);
  CHECK_THROWS_AS(Q.set_interior(0, 1, 2, 1, 1, 1, "z1"), std::invalid_argument);
  CHECK_THROWS_AS(cflip::subsquare_flip_plan(3, 2, 3), std::invalid_argument);
}
