#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <utility>

#include "clusterflip/hirota.hpp"
#include "support/oracles.hpp"

using cflip::GoodLattice;
using cflip::LatticePoint;
using cflip::LaurentPoly;
using cflip::good_lattice;
using cflip::grid_value;
using cflip::hirota_f;
using cflip::hirota_g;
using cflip::hirota_x;
using cflip::psi;

TEST_CASE("good lattice sizes follow the closed formulas") {
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) {
      GoodLattice L = good_lattice(a, b);
      CHECK(L.points.size() ==
            std::size_t(a * b + (a + b + 1) * (a + b + 2) / 2 - 2));
      CHECK(L.boundary.size() == std::size_t(3 * (a + b) - 2));
      CHECK(L.left.size() == std::size_t(a + 2 * b - 2));
      CHECK(L.right.size() == std::size_t(2 * a + b - 2));
      CHECK(L.below.size() == std::size_t(2 * a + b - 2));
      CHECK(L.above.size() == std::size_t(a + 2 * b - 2));
    }

  std::set<LatticePoint> origin{{0, 0}};
  CHECK(good_lattice(0, 0).points == origin);
  CHECK(good_lattice(1, 0).points == origin);
  CHECK(good_lattice(2, 0).points == origin);
  CHECK(good_lattice(0, 1).points == origin);
  CHECK(good_lattice(0, 2).points == origin);
  for (int b = 3; b <= 8; ++b) {
    CHECK(good_lattice(0, b).points.size() ==
          std::size_t(1 + (b - 1) * (b - 2) / 2));
    CHECK(good_lattice(b, 0).points.size() ==
          std::size_t(1 + (b - 1) * (b - 2) / 2));
  }
  CHECK_THROWS_AS(good_lattice(-1, 2), std::invalid_argument);
}

TEST_CASE("good lattice of shape (3,5)") {
  GoodLattice L = good_lattice(3, 5);
  CHECK(L.points.size() == 58);
  CHECK(L.boundary.size() == 22);
  CHECK(L.left.size() == 11);
  CHECK(L.right.size() == 9);
  CHECK(L.points.count({3, 4}) == 1);
  CHECK(L.points.count({-5, -2}) == 1);
  CHECK(L.points.count({3, 5}) == 0);
  CHECK(L.points.count({-5, -3}) == 0);
  for (LatticePoint corner : {LatticePoint{0, -3}, {3, 0}, {3, 4}, {2, 5},
                              {0, 5}, {-5, 0}, {-5, -2}, {-4, -3}})
    CHECK(L.boundary.count(corner) == 1);
  CHECK(L.boundary.count({0, 0}) == 0);
}

namespace {

std::set<LatticePoint> block_support(const LaurentPoly& X) {
  REQUIRE(X.num_terms() == 1);
  std::set<LatticePoint> support;
  for (const auto& [v, e] : X.terms()[0].first.entries()) {
    CHECK(e == 1);
    support.insert({v.i0, v.i1});
  }
  return support;
}

}  // namespace

TEST_CASE("variable block matches the shifted lattice") {
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 5; ++b) {
      std::set<LatticePoint> want = good_lattice(a - 1, b - 1).points;
      want.insert({a - 1, b - 1});
      want.insert({1 - b, 1 - a});
      CHECK(block_support(hirota_x(a, b, 0, 0)) == want);
    }
  for (int b = 1; b <= 5; ++b) {
    std::set<LatticePoint> tri, mirror;
    for (int p = 0; p <= b - 1; ++p)
      for (int q = 0; p + q <= b - 1; ++q) {
        tri.insert({-p, q});
        mirror.insert({p, -q});
      }
    CHECK(block_support(hirota_x(1, b, 0, 0)) == tri);
    CHECK(block_support(hirota_x(b, 1, 0, 0)) == mirror);
  }
  CHECK(hirota_x(0, 0, 2, -1) == grid_value(2, -1));
  CHECK(hirota_x(1, 1, 2, -1) == grid_value(2, -1));
  CHECK(hirota_x(0, 1, 2, -1) == LaurentPoly(1));
  CHECK(hirota_x(1, 0, 2, -1) == LaurentPoly(1));
}

TEST_CASE("grid recurrence bases and psi cross-check") {
  CHECK(hirota_f(0, 0, 1, 2) == grid_value(1, 2));
  CHECK(hirota_f(0, 5, 1, 2) == grid_value(1, 2));
  CHECK(hirota_f(5, 0, 1, 2) == grid_value(1, 2));
  CHECK(hirota_f(1, 1, 0, 0) == psi(1, 1, 0, 0));
  CHECK(hirota_f(2, 2, 0, 0) == psi(2, 3, 0, 0));
  for (int k = 1; k <= 4; ++k)
    for (int t = 1; t <= k; ++t) {
      CHECK(hirota_f(t, k + 1 - t, 0, 0) == psi(t, k, 0, 0));
      CHECK(hirota_f(t, k + 1 - t, -2, 5) == psi(t, k, -2, 5));
    }
  CHECK_THROWS_AS(hirota_f(-1, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("polynomiality of the lattice-completed values") {
  using cflip::testing::specialize_all_x;
  LaurentPoly x = LaurentPoly::var(cflip::VarId::sym('x'));

  CHECK(hirota_g(0, 0, 0, 0) == grid_value(0, 0) * grid_value(0, 0));
  for (int b = 1; b <= 6; ++b) {
    LaurentPoly prod(1);
    for (const auto& [k, l] : good_lattice(0, b).points)
      prod = prod * grid_value(k, l);
    CHECK(hirota_g(0, b, 0, 0) == prod);
    LaurentPoly mirror(1);
    for (const auto& [k, l] : good_lattice(b, 0).points)
      mirror = mirror * grid_value(k, l);
    CHECK(hirota_g(b, 0, 0, 0) == mirror);
  }

  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      LaurentPoly g = hirota_g(a, b, 0, 0);
      CHECK(g.is_polynomial());
      mpz_class c;
      mpz_ui_pow_ui(c.get_mpz_t(), 2, static_cast<unsigned>(a * b));
      int deg = 1 + a * b + (a + b - 1) * (a + b - 2) / 2;
      CHECK(specialize_all_x(g) == LaurentPoly(c) * x.pow(deg));

      const auto& lattice = good_lattice(a, b).points;
      for (const auto& [m, coeff] : g.terms())
        for (const auto& [v, e] : m.entries())
          CHECK(lattice.count({v.i0, v.i1}) == 1);
    }
}

TEST_CASE("octahedron recurrence for the completed values") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) CHECK(cflip::verify_g_recurrence(a, b, 0, 0));
  CHECK(cflip::verify_g_recurrence(1, 1, 3, -2));
}
