#ifndef CLUSTERFLIP_HIROTA_HPP
#define CLUSTERFLIP_HIROTA_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "clusterflip/laurent.hpp"
#include "clusterflip/stairpath.hpp"

namespace cflip {

using LatticePoint = std::pair<int, int>;

namespace detail {

inline long long cross(LatticePoint o, LatticePoint a, LatticePoint b) {
  return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long long>(a.second - o.second) * (b.first - o.first);
}

// Monotone-chain convex hull; collinear edge points are dropped, so the
// result holds only the polygon's corners, in counterclockwise order.
inline std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  std::size_t lower = k + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (k >= lower && cross(h[k - 2], h[k - 1], *it) <= 0) --k;
    h[k++] = *it;
  }
  h.resize(k - 1);
  return h;
}

inline bool on_segment(LatticePoint p, LatticePoint a, LatticePoint b) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
         std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

}  // namespace detail

// The lattice of offsets whose variables appear in a two-parameter family of
// grid polynomials: for a,b >= 1 it is the octagonal region
//   { (p,q) : -a <= min(-p, q, q-p)  and  max(-p, q, q-p) <= b }
// minus the two corners (a,b) and (-b,-a); for a = 0 or b = 0 it degenerates
// to a triangle (a single point when a+b <= 2).  `boundary` holds the points
// lying on the convex-hull border, and the four directional subsets split the
// boundary by the sign of one coordinate (they overlap at the corners).
struct GoodLattice {
  int a = 0;
  int b = 0;
  std::set<LatticePoint> points;
  std::set<LatticePoint> boundary;
  std::set<LatticePoint> left, right, below, above;
};

inline GoodLattice good_lattice(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("good_lattice: negative parameter");
  GoodLattice L;
  L.a = a;
  L.b = b;
  if (a >= 1 && b >= 1) {
    for (int p = -b; p <= a; ++p)
      for (int q = -a; q <= b; ++q) {
        int lo = std::min({-p, q, q - p});
        int hi = std::max({-p, q, q - p});
        if (-a <= lo && hi <= b) L.points.insert({p, q});
      }
    L.points.erase({a, b});
    L.points.erase({-b, -a});
  } else {
    L.points.insert({0, 0});
    if (a == 0) {
      for (int p = 1; p <= b - 2; ++p)
        for (int q = 1; p + q <= b - 1; ++q) L.points.insert({-p, q});
    } else {
      for (int p = 1; p <= a - 2; ++p)
        for (int q = 1; p + q <= a - 1; ++q) L.points.insert({p, -q});
    }
  }

  std::vector<LatticePoint> pts(L.points.begin(), L.points.end());
  auto hull = detail::convex_hull(pts);
  for (const auto& p : pts) {
    bool on = hull.size() <= 2;
    for (std::size_t e = 0; !on && e < hull.size(); ++e)
      on = detail::on_segment(p, hull[e], hull[(e + 1) % hull.size()]);
    if (!on) continue;
    L.boundary.insert(p);
    if (p.first < 0) L.left.insert(p);
    if (p.first > 0) L.right.insert(p);
    if (p.second < 0) L.below.insert(p);
    if (p.second > 0) L.above.insert(p);
  }
  return L;
}

// The discrete Hirota-style recurrence on the grid:
//   f(a,0) = f(0,b) = x_{i,j}
//   f(a,b) = (f(a,b-1,i-1,j) f(a-1,b,i+1,j) + f(a-1,b,i,j-1) f(a,b-1,i,j+1))
//            / f(a-1,b-1,i,j)
// Values are memoized at the origin and index-shifted, matching the
// translation equivariance of the recurrence.  f(t, k+1-t) recovers psi_{t,k}.
class HirotaF {
 public:
  LaurentPoly operator()(int a, int b, int i, int j) {
    if (a < 0 || b < 0) throw std::invalid_argument("hirota_f: negative parameter");
    if (a == 0 || b == 0) return grid_value(i, j);
    return shift_grid(at_origin(a, b), i, j);
  }

 private:
  LaurentPoly at_origin(int a, int b) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find({a, b});
      if (it != memo_.end()) return it->second;
    }
    HirotaF& self = *this;
    LaurentPoly r = div_exact(self(a, b - 1, -1, 0) * self(a - 1, b, 1, 0) +
                                  self(a - 1, b, 0, -1) * self(a, b - 1, 0, 1),
                              self(a - 1, b - 1, 0, 0));
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::pair<int, int>{a, b}, r);
    return r;
  }

  std::mutex mu_;
  std::map<std::pair<int, int>, LaurentPoly> memo_;
};

inline LaurentPoly hirota_f(int a, int b, int i, int j) {
  static HirotaF table;
  return table(a, b, i, j);
}

// The monomial X^{a,b}_{i,j}: the product of x_{i-p,j+q} over all integer
// pairs with 1-a <= min(p, q, p+q) and max(p, q, p+q) <= b-1.  Empty range
// gives 1; the special case X^{0,0} is x_{i,j} itself.
inline LaurentPoly hirota_x(int a, int b, int i, int j) {
  if (a < 0 || b < 0) throw std::invalid_argument("hirota_x: negative parameter");
  if (a == 0 && b == 0) return grid_value(i, j);
  std::vector<Monomial::Entry> es;
  for (int p = 1 - a; p <= b - 1; ++p)
    for (int q = 1 - a; q <= b - 1; ++q) {
      int lo = std::min({p, q, p + q});
      int hi = std::max({p, q, p + q});
      if (1 - a <= lo && hi <= b - 1) es.push_back({grid_var(i - p, j + q), 1});
    }
  return LaurentPoly(Monomial(std::move(es)));
}

// g(a,b,i,j) = X^{a,b}_{i,j} * f(a,b,i,j); always a polynomial.
inline LaurentPoly hirota_g(int a, int b, int i, int j) {
  LaurentPoly r = hirota_x(a, b, i, j) * hirota_f(a, b, i, j);
  if (!r.is_polynomial())
    throw std::logic_error("hirota_g: product is not a polynomial");
  return r;
}

// Checks the octahedron-style recurrence satisfied by g at one position:
//   g(a+1,b+1,i,j) g(a,b,i,j) =
//     x_{i,j-a} x_{i,j+b} g(a+1,b,i-1,j) g(a,b+1,i+1,j)
//   + x_{i+a,j} x_{i-b,j} g(a,b+1,i,j-1) g(a+1,b,i,j+1)
inline bool verify_g_recurrence(int a, int b, int i, int j) {
  LaurentPoly lhs = hirota_g(a + 1, b + 1, i, j) * hirota_g(a, b, i, j);
  LaurentPoly rhs =
      grid_value(i, j - a) * grid_value(i, j + b) * hirota_g(a + 1, b, i - 1, j) *
          hirota_g(a, b + 1, i + 1, j) +
      grid_value(i + a, j) * grid_value(i - b, j) * hirota_g(a, b + 1, i, j - 1) *
          hirota_g(a + 1, b, i, j + 1);
  return lhs == rhs;
}

}  // namespace cflip

#endif
